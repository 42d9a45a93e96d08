#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "triplecorr/zeta.hpp"

using namespace triplecorr;

namespace {

// Independent Euler-Maclaurin oracle: a straight-line reimplementation kept
// free of the library's branch logic, run at 4x depth.
Cx zeta_oracle(const Cx& s) {
    const int N = 80 + int(std::ceil(std::abs(s.imag())));
    Cx sum = 0.0;
    for (int n = N - 1; n >= 1; --n) sum += std::pow(Cx(double(n)), -s);
    sum += std::pow(Cx(double(N)), 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Cx(double(N)), -s);
    std::vector<double> coef{0.0};
    for (int k = 1; k <= 24; ++k) {
        double z2k;
        if (k == 1) {
            z2k = kPi * kPi / 6.0;
        } else if (k == 2) {
            z2k = kPi * kPi * kPi * kPi / 90.0;
        } else {
            z2k = 0.0;
            for (int n = 3000; n >= 1; --n) z2k += std::pow(double(n), -2.0 * k);
        }
        coef.push_back(((k % 2 == 1) ? 2.0 : -2.0) * z2k / std::pow(kTwoPi, 2.0 * k));
    }
    Cx poch = s;
    for (int k = 1; k <= 24; ++k) {
        if (k > 1) poch *= (s + double(2 * k - 3)) * (s + double(2 * k - 2));
        sum += coef[std::size_t(k)] * poch * std::pow(Cx(double(N)), -s - double(2 * k - 1));
    }
    return sum;
}

double rel(const Cx& a, const Cx& b) { return std::abs(a - b) / std::abs(b); }

// published values
constexpr double kGamma0 = 0.5772156649015328606;
constexpr double kGamma1 = -0.0728158454836767249;
constexpr double kGamma2 = -0.0096903631928723184;
constexpr double kGamma3 = 0.0020538344203033459;
constexpr double kGamma4 = 0.0023253700654673000;

}  // namespace

TEST_CASE("zeta at analytically forced points") {
    CHECK(zeta(Cx(2.0)).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
    CHECK(std::abs(zeta(Cx(2.0)).imag()) < 1e-15);
    CHECK(zeta(Cx(0.0)).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(zeta(Cx(3.0)).real() == doctest::Approx(1.2020569031595943).epsilon(1e-14));
    CHECK(zeta(Cx(0.5)).real() == doctest::Approx(-1.4603545088095868).epsilon(1e-13));
}

TEST_CASE("zeta(1+i) against the quadruple-depth oracle") {
    const Cx frozen(0.5821580597520036, -0.9268485643308073);  // oracle output
    const Cx live = zeta_oracle(Cx(1.0, 1.0));
    CHECK(std::abs(live - frozen) < 1e-13);
    CHECK(rel(zeta(Cx(1.0, 1.0)), frozen) < 1e-12);
}

TEST_CASE("zeta pole and domain errors") {
    CHECK_THROWS_AS(zeta(Cx(1.0, 1e-13)), PoleAtOne);
    CHECK_THROWS_AS(zeta(Cx(-0.7, 0.0)), DomainError);
    CHECK_THROWS_AS(zeta(Cx(2.0, 2e4)), DomainError);
    EulerMaclaurinParams bad{5, 12};
    CHECK_THROWS_AS(zeta(Cx(2.0), bad), DomainError);
}

TEST_CASE("self-consistency: doubling both parameters moves nothing") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.4, 3.0), im(-50.0, 50.0);
    EulerMaclaurinParams base;
    EulerMaclaurinParams dbl{40, 24};
    for (int k = 0; k < 100; ++k) {
        const Cx s(re(rng), im(rng));
        CHECK(rel(zeta(s, base), zeta(s, dbl)) < 1e-10);
    }
    for (double t : {1000.0, 9999.0}) {
        const Cx s(0.5, t);
        CHECK(rel(zeta(s, base), zeta(s, dbl)) < 1e-10);
    }
}

TEST_CASE("Schwarz reflection for all four operations") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(0.45, 3.0), im(0.1, 30.0);
    for (int k = 0; k < 20; ++k) {
        const Cx s(re(rng), im(rng));
        CHECK(rel(zeta(std::conj(s)), std::conj(zeta(s))) < 1e-10);
        CHECK(rel(zeta_derivative(std::conj(s), 1), std::conj(zeta_derivative(s, 1))) < 1e-10);
        CHECK(rel(zeta_log_deriv(std::conj(s)), std::conj(zeta_log_deriv(s))) < 1e-10);
        CHECK(rel(zeta_log_deriv_prime(std::conj(s)), std::conj(zeta_log_deriv_prime(s))) <
              1e-10);
    }
    CHECK(rel(zeta_log_deriv(Cx(1.3, -7.0)), std::conj(zeta_log_deriv(Cx(1.3, 7.0)))) <
          1e-12);
}

TEST_CASE("Stieltjes constants pinned against published values") {
    const auto& g = stieltjes_constants();
    CHECK(std::abs(g[0] - kGamma0) < 1e-13);
    CHECK(std::abs(g[1] - kGamma1) < 1e-13);
    CHECK(std::abs(g[2] - kGamma2) < 1e-12);
    CHECK(std::abs(g[3] - kGamma3) < 1e-12);
    CHECK(std::abs(g[4] - kGamma4) < 1e-11);
}

TEST_CASE("zeta_log_deriv near the pole follows the Laurent oracle") {
    // leading terms -1/x + gamma0 - (gamma0^2 + 2 gamma1) x, built from the
    // representable offset (1 + 1e-6) - 1
    const Cx s(1.0 + 1e-6, 0.0);
    const double x = s.real() - 1.0;
    const Cx v = zeta_log_deriv(s);
    const double expect = -1.0 / x + kGamma0 - (kGamma0 * kGamma0 + 2.0 * kGamma1) * x;
    CHECK(std::abs(v.real() - expect) < 1e-6);  // absolute; the value is ~1e6
    CHECK(std::abs(v.imag()) < 1e-12);
    CHECK(v.real() == doctest::Approx(-1e6 + kGamma0).epsilon(1e-10));
}

TEST_CASE("zeta_log_deriv at 2 against finite differences of zeta") {
    const double h = 1e-6;
    const Cx fd = (zeta(Cx(2.0 + h)) - zeta(Cx(2.0 - h))) / (2.0 * h) / zeta(Cx(2.0));
    CHECK(rel(zeta_log_deriv(Cx(2.0)), fd) < 1e-6);
    CHECK(zeta_derivative(Cx(2.0), 1).real() ==
          doctest::Approx(-0.9375482543158437).epsilon(1e-13));
}

TEST_CASE("zeta_log_deriv_prime near the pole and against finite differences") {
    const double x = 1e-4;
    const Cx v = zeta_log_deriv_prime(Cx(1.0 + x, 0.0));
    CHECK(v.real() == doctest::Approx(1e8).epsilon(1e-3));  // +1/x^2 + O(1)
    const double h = 1e-5;
    const Cx fd = (zeta_log_deriv(Cx(3.0 + h)) - zeta_log_deriv(Cx(3.0 - h))) / (2.0 * h);
    CHECK(rel(zeta_log_deriv_prime(Cx(3.0)), fd) < 1e-5);
    CHECK(std::abs(zeta_log_deriv_prime(Cx(2.5)).imag()) < 1e-12);
}

TEST_CASE("log-derivative identity with independently computed factors") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> re(0.6, 3.0), im(-20.0, 20.0);
    for (int k = 0; k < 10; ++k) {
        const Cx s(re(rng), im(rng));
        const Cx z = zeta(s);
        const Cx zp = zeta_derivative(s, 1);
        const Cx zpp = zeta_derivative(s, 2);
        const Cx lhs = zeta_log_deriv_prime(s);
        const Cx rhs = zpp / z - (zp / z) * (zp / z);
        CHECK(rel(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("Laurent and direct branches agree at the switch radius") {
    const double r = 1e-3;
    for (double ang : {0.0, 0.8, 2.1, 3.9, 5.5}) {
        const Cx w = std::polar(r, ang);
        const Cx lo = zeta_log_deriv(1.0 + w, {}, 1.0001e-3);
        const Cx hi = zeta_log_deriv(1.0 + w, {}, 0.9999e-3);
        CHECK(rel(lo, hi) < 1e-8);
        const Cx lo2 = zeta_log_deriv_prime(1.0 + w, {}, 1.0001e-3);
        const Cx hi2 = zeta_log_deriv_prime(1.0 + w, {}, 0.9999e-3);
        CHECK(rel(lo2, hi2) < 1e-8);
    }
}

TEST_CASE("chi log-derivative asymptotic") {
    CHECK(std::abs(chi_log_deriv_asymptotic(kTwoPi)) < 1e-15);
    CHECK(chi_log_deriv_asymptotic(kTwoPi * std::exp(1.0)) ==
          doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(chi_log_deriv_asymptotic(75000.0) ==
          doctest::Approx(-std::log(75000.0 / kTwoPi)).epsilon(1e-14));
    CHECK(chi_log_deriv_asymptotic(75000.0) == doctest::Approx(-9.3875).epsilon(1e-4));
    CHECK_THROWS_AS(chi_log_deriv_asymptotic(-1.0), DomainError);
    CHECK_THROWS_AS(chi_log_deriv_asymptotic(0.0), DomainError);
}
