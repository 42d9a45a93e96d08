#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "triplecorr/grid_io.hpp"
#include "triplecorr/triple.hpp"

using namespace triplecorr;

namespace {

const PrimeTable& table_small() {
    static PrimeTable t = build_prime_table(2000);
    return t;
}

const PrimeTable& table_mid() {
    static PrimeTable t = build_prime_table(20000);
    return t;
}

double rel(const Cx& a, const Cx& b) { return std::abs(a - b) / std::abs(b); }

// symmetric offset axis {-(n-1/2)h, ..., -h/2, h/2, ..., (n-1/2)h}
std::vector<double> offset_axis(double window, double h) {
    const int n = int(std::round(window / h));
    std::vector<double> ax(2 * std::size_t(n));
    for (int k = 0; k < 2 * n; ++k) ax[std::size_t(k)] = (k - n + 0.5) * h;
    return ax;
}

SampledFunction2D sample(const std::vector<double>& ax,
                         const std::function<double(double, double)>& f) {
    SampledFunction2D out;
    out.v1_axis = ax;
    out.v2_axis = ax;
    out.values.resize(ax.size() * ax.size());
    for (std::size_t i = 0; i < ax.size(); ++i)
        for (std::size_t j = 0; j < ax.size(); ++j) {
            double v = f(ax[i], ax[j]);
            if (std::abs(v) < 1e-12) v = 0.0;  // keep far cells exactly zero
            out.values[i * ax.size() + j] = v;
        }
    return out;
}

}  // namespace

TEST_CASE("fused prime pass equals the generic objects") {
    const double v1 = 5.0, v2 = 11.0, vd = v1 - v2;
    const auto bt = bracket_prime_terms(v1, v2, table_mid());
    const Cx iv1(0.0, v1), iv2(0.0, v2), ivd(0.0, vd);
    CHECK(rel(bt.a1, a_term(iv1, table_mid()).value) < 1e-9);
    CHECK(rel(bt.a2, a_term(iv2, table_mid()).value) < 1e-9);
    CHECK(rel(bt.ad, a_term(ivd, table_mid()).value) < 1e-9);
    CHECK(rel(bt.b1, b_term(iv1, table_mid()).value) < 1e-9);
    CHECK(rel(bt.bd, b_term(ivd, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e1.q, q_term(iv1, iv2, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e1.p_xy, p_term(iv1, iv2, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e1.p_yx, p_term(iv2, iv1, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e2.q, q_term(-iv2, ivd, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e2.p_xy, p_term(-iv2, ivd, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e2.p_yx, p_term(ivd, -iv2, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e3.p_xy, p_term(iv1, ivd, table_mid()).value) < 1e-9);
    CHECK(rel(bt.e3.a_x, a_term(iv1, table_mid()).value) < 1e-9);
}

TEST_CASE("bracket symmetry, parity, realness of the unfolded sum") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_mid(), em, 1e-6};
    const double T = 75000.0;
    const double b1 = bracket(5.0, 11.0, T, deps);
    CHECK(std::abs(bracket(11.0, 5.0, T, deps) - b1) / std::abs(b1) < 1e-8);
    CHECK(std::abs(bracket(-5.0, -11.0, T, deps) - b1) / std::abs(b1) < 1e-8);

    // all thirteen terms summed without conjugate folding stay real
    const Cx iv1(0.0, 5.0), iv2(0.0, 11.0);
    Cx sum = log_power_integral(3, T);
    sum += i3(iv1, iv2, Cx(0.0), T, table_mid(), em).value;
    sum += i3(Cx(0.0), iv1, -iv2, T, table_mid(), em).value;
    sum += i3(Cx(0.0), iv2, -iv1, T, table_mid(), em).value;
    sum += i3(-iv1, -iv2, Cx(0.0), T, table_mid(), em).value;
    sum += i3(Cx(0.0), -iv2, iv1, T, table_mid(), em).value;
    sum += i3(Cx(0.0), -iv1, iv2, T, table_mid(), em).value;
    sum += i1(Cx(0.0), iv2, T, table_mid(), em).value;
    sum += i1(Cx(0.0), iv1, T, table_mid(), em).value;
    sum += i1(-iv2, iv1, T, table_mid(), em).value;
    sum += i1(-iv2, Cx(0.0), T, table_mid(), em).value;
    sum += i1(-iv1, iv2, T, table_mid(), em).value;
    sum += i1(-iv1, Cx(0.0), T, table_mid(), em).value;
    CHECK(std::abs(sum.imag()) < 1e-6 * std::abs(sum));
    CHECK(std::abs(sum.real() - b1) / std::abs(b1) < 1e-9);

    CHECK_THROWS_AS(bracket(5.0, 5.0, T, deps), SingularInput);
    CHECK_THROWS_AS(bracket(0.0, 5.0, T, deps), SingularInput);
}

TEST_CASE("normalized bracket approaches the sine-kernel determinant far out") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_mid(), em, 1e-6};
    const double T = 75000.0;
    const double L = std::log(T / kTwoPi);
    const double val = bracket(5.3, 17.1, T, deps) / log_power_integral(3, T);
    const double det = sine_kernel_det(L * 5.3 / kTwoPi, L * 17.1 / kTwoPi);
    CHECK(std::abs(val - det) < 0.15);
}

TEST_CASE("theory grid: axes, masking, envelope") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_small(), em, 1e-6};
    const auto grid = theory_grid(6.0, 0.5, 10000.0, 0.75, deps);
    REQUIRE(grid.n1() == 12);
    CHECK(grid.v1_axis.front() == doctest::Approx(0.25));
    CHECK(grid.v1_axis.back() == doctest::Approx(5.75));

    for (std::size_t i = 0; i < grid.n1(); ++i) {
        for (std::size_t j = 0; j < grid.n2(); ++j) {
            const double v1 = grid.v1_axis[i], v2 = grid.v2_axis[j];
            const bool near_line =
                std::min({v1, v2, std::abs(v1 - v2)}) < 0.75;
            CHECK(grid.masked(i, j) == near_line);
            if (near_line) {
                CHECK(grid.value(i, j) == 0.0);  // never evaluated
            } else {
                CHECK(std::isfinite(grid.value(i, j)));
                CHECK(grid.value(i, j) > -0.5);
                CHECK(grid.value(i, j) < 1.5);
            }
        }
    }
    CHECK_THROWS_AS(theory_grid(6.0, 0.5, 10000.0, 0.0, deps), DomainError);
}

TEST_CASE("grid CSV round trip is lossless enough for diff and deterministic") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_small(), em, 1e-6};
    const auto grid = theory_grid(4.0, 1.0, 10000.0, 0.6, deps);
    std::ostringstream os1, os2;
    write_grid_csv(os1, grid);
    write_grid_csv(os2, grid);
    CHECK(os1.str() == os2.str());  // byte-identical

    std::istringstream in(os1.str());
    const auto back = read_grid_csv(in);
    REQUIRE(back.n1() == grid.n1());
    REQUIRE(back.n2() == grid.n2());
    CHECK(back.T == doctest::Approx(grid.T).epsilon(1e-12));
    for (std::size_t k = 0; k < grid.values.size(); ++k) {
        CHECK(back.mask[k] == grid.mask[k]);
        CHECK(back.values[k] == doctest::Approx(grid.values[k]).epsilon(1e-10));
    }
}

TEST_CASE("integrate_against_test: zero, linearity, bump against pointwise value") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_small(), em, 1e-6};
    const double T = 10000.0;
    const auto ax = offset_axis(8.0, 0.25);

    const auto zero = sample(ax, [](double, double) { return 0.0; });
    CHECK(integrate_against_test(zero, T, deps) == 0.0);

    const double c1 = 4.1, c2 = -2.3, sig = 0.35;
    auto bump = [&](double v1, double v2) {
        return std::exp(-((v1 - c1) * (v1 - c1) + (v2 - c2) * (v2 - c2)) /
                        (2.0 * sig * sig));
    };
    const auto f = sample(ax, bump);
    const double I = integrate_against_test(f, T, deps);
    const double mass = kTwoPi * sig * sig;  // integral of the bump
    const double expect = mass * bracket(c1, c2, T, deps) / std::pow(kTwoPi, 3.0);
    CHECK(I == doctest::Approx(expect).epsilon(0.05));

    // linearity
    auto bump2 = [&](double v1, double v2) { return bump(v2, v1); };
    const auto g = sample(ax, bump2);
    auto fg = f;
    for (std::size_t k = 0; k < fg.values.size(); ++k) fg.values[k] += g.values[k];
    const double Ifg = integrate_against_test(fg, T, deps);
    const double Ig = integrate_against_test(g, T, deps);
    CHECK(Ifg == doctest::Approx(I + Ig).epsilon(1e-10));

    // grid validation
    SampledFunction2D bad = f;
    bad.v1_axis[0] += 0.01;
    CHECK_THROWS_AS(integrate_against_test(bad, T, deps), GridMismatch);
}

TEST_CASE("integrate_against_test converges under step halving") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_small(), em, 1e-6};
    const double T = 10000.0;
    auto smooth = [](double v1, double v2) {
        return std::exp(-(v1 * v1 + v2 * v2) / 18.0) * (2.0 + std::cos(v1 - 0.3) * v2 / 4.0);
    };
    double I[3];
    const double hs[3] = {0.8, 0.4, 0.2};
    for (int k = 0; k < 3; ++k)
        I[k] = integrate_against_test(sample(offset_axis(8.0, hs[k]), smooth), T, deps);
    const double d1 = std::abs(I[1] - I[0]);
    const double d2 = std::abs(I[2] - I[1]);
    CHECK(d2 < 0.6 * d1);  // at least first-order shrinkage near the PV lines
}

TEST_CASE("sine kernel determinant") {
    CHECK(std::abs(sine_kernel_det(0.0, 0.0)) < 1e-14);
    CHECK(std::abs(sine_kernel_det(0.7, 0.7)) < 1e-14);
    CHECK(std::abs(sine_kernel_det(-1.9, -1.9)) < 1e-14);

    // determinant-form oracle at (0.5, 2.5)
    auto S = [](double x) { return x == 0.0 ? 1.0 : std::sin(kPi * x) / (kPi * x); };
    const double m00 = 1.0, m01 = S(0.5), m02 = S(2.5);
    const double m11 = 1.0, m12 = S(0.5 - 2.5);
    const double m22 = 1.0;
    const double det = m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
                       m02 * (m01 * m12 - m11 * m02);
    CHECK(sine_kernel_det(0.5, 2.5) == doctest::Approx(det).epsilon(1e-14));
    CHECK(sine_kernel_det(5.0, 11.3) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("limit check rows") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_mid(), em, 1e-9};
    const auto rows = limit_check(1.3, 2.7, {1e4, 1e6}, deps);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].limit_value == rows[1].limit_value);  // independent of T
    CHECK(rows[1].abs_error < rows[0].abs_error);
    CHECK_THROWS_AS(limit_check(1.7, 1.7, {1e4}, deps), SingularInput);
    CHECK_THROWS_AS(limit_check(1.3, 2.7, {10.0}, deps), DomainError);
}

TEST_CASE("full sum decomposition") {
    EulerMaclaurinParams em;
    BracketDeps deps{table_small(), em, 1e-6};
    const double T = 10000.0;
    const auto ax = offset_axis(8.0, 0.25);

    // compactly supported away from every singular line: no pair/single part
    auto away = [](double v1, double v2) {
        const double r2 = (v1 - 4.5) * (v1 - 4.5) + (v2 + 3.5) * (v2 + 3.5);
        return r2 < 1.0 ? std::exp(-r2 / 0.08) : 0.0;
    };
    const auto f_away = sample(ax, away);
    const auto d0 = full_sum_decomposition(f_away, T, deps);
    CHECK(d0.pair_terms == 0.0);
    CHECK(d0.single_term == 0.0);
    CHECK(d0.distinct_triple != 0.0);

    // bump at the origin: the single term carries f(0,0) log-weight mass
    auto origin = [](double v1, double v2) {
        return std::exp(-(v1 * v1 + v2 * v2) / 2.0);
    };
    const auto f_origin = sample(ax, origin);
    const auto d1 = full_sum_decomposition(f_origin, T, deps);
    CHECK(d1.single_term ==
          doctest::Approx(log_power_integral(1, T) / kTwoPi).epsilon(0.05));

    // halved-step consistency of the total
    const auto f_half = sample(offset_axis(8.0, 0.125), origin);
    const auto d2 = full_sum_decomposition(f_half, T, deps);
    CHECK(d2.total() == doctest::Approx(d1.total()).epsilon(0.05));
}
