#include "triplecorr/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "triplecorr/oracles.hpp"
#include "triplecorr/primes.hpp"
#include "triplecorr/ratios.hpp"
#include "triplecorr/rmt.hpp"
#include "triplecorr/triple.hpp"

namespace triplecorr {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double rel_dev(const Cx& a, const Cx& b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

// Well-separated random angles whose determinant is bounded away from zero:
// a relative comparison against a value at the determinant's zero set only
// measures rounding luck, not the identity.
std::array<double, 3> draw_triple(std::mt19937_64& rng, int N) {
    std::uniform_real_distribution<double> uni(-kPi + 0.05, kPi - 0.05);
    for (;;) {
        std::array<double, 3> t{uni(rng), uni(rng), uni(rng)};
        const double d12 = std::abs(t[0] - t[1]);
        const double d13 = std::abs(t[0] - t[2]);
        const double d23 = std::abs(t[1] - t[2]);
        if (std::min({d12, d13, d23}) > 0.05 &&
            std::max({d12, d13, d23}) < kTwoPi - 0.05 &&
            std::abs(gaudin_det(t[0], t[1], t[2], N)) > 0.05)
            return t;
    }
}

// the six-fold moment assembled without conjugate folding; used to probe the
// imaginary residual of the full thirteen-term sum
Cx bracket_unfolded(double v1, double v2, double T, const PrimeTable& table,
                    const EulerMaclaurinParams& em) {
    const Cx iv1(0.0, v1), iv2(0.0, v2);
    Cx sum = log_power_integral(3, T);
    sum += i3(iv1, iv2, Cx(0.0), T, table, em).value;
    sum += i3(Cx(0.0), iv1, -iv2, T, table, em).value;
    sum += i3(Cx(0.0), iv2, -iv1, T, table, em).value;
    sum += i3(-iv1, -iv2, Cx(0.0), T, table, em).value;
    sum += i3(Cx(0.0), -iv2, iv1, T, table, em).value;
    sum += i3(Cx(0.0), -iv1, iv2, T, table, em).value;
    sum += i1(Cx(0.0), iv2, T, table, em).value;
    sum += i1(Cx(0.0), iv1, T, table, em).value;
    sum += i1(-iv2, iv1, T, table, em).value;
    sum += i1(-iv2, Cx(0.0), T, table, em).value;
    sum += i1(-iv1, iv2, T, table, em).value;
    sum += i1(-iv1, Cx(0.0), T, table, em).value;
    return sum;
}

}  // namespace

CheckResult rmt_flagship_check(const std::vector<int>& Ns, int samples,
                               std::uint64_t seed, double tol) {
    CheckResult res;
    res.name = "t3 bracket equals Gaudin determinant";
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    std::string counterexample;
    for (int N : Ns) {
        for (int s = 0; s < samples; ++s) {
            const auto t = draw_triple(rng, N);
            const double det = gaudin_det(t[0], t[1], t[2], N);
            const double val = t3_integrand(t[0], t[1], t[2], N);
            const double dev = std::abs(val - det) / std::max(1e-300, std::abs(det));
            if (dev > worst) {
                worst = dev;
                std::ostringstream os;
                os << "N=" << N << " theta=(" << t[0] << "," << t[1] << "," << t[2]
                   << ") t3=" << val << " det=" << det;
                counterexample = os.str();
            }
        }
    }
    res.pass = worst < tol;
    res.detail = "max rel dev " + fmt(worst) + (res.pass ? "" : " at " + counterexample);
    return res;
}

std::vector<CheckResult> run_selftest(const EngineConfig& config) {
    std::vector<CheckResult> out;
    const PrimeTable table = build_prime_table(config.prime_limit);
    EulerMaclaurinParams em;
    em.bernoulli_depth = config.em_depth;
    std::mt19937_64 rng(20090401);
    std::uniform_real_distribution<double> uni01(0.0, 1.0);
    auto rnd = [&](double lo, double hi) { return lo + (hi - lo) * uni01(rng); };

    out.push_back(rmt_flagship_check({3, 5, 10, 25}, 25, 42));

    {  // first-derivative identity of the 3/3 product: direct A
        CheckResult r{"a_zeta_33 at the A-collapse point equals a_term", false, ""};
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            const Cx a1(rnd(0.05, 0.2), rnd(-0.2, 0.2));
            const Cx a2(rnd(0.05, 0.2), rnd(-0.2, 0.2));
            const Cx b(rnd(0.05, 0.2), rnd(-0.2, 0.2));
            const Cx lhs = a_zeta_33(-b, a2, -a1, a1, a2, b, table).value;
            const Cx rhs = a_term(a1 + b, table).value;
            worst = std::max(worst, rel_dev(lhs, rhs));
        }
        r.pass = worst < 1e-8;
        r.detail = "max rel dev " + fmt(worst);
        out.push_back(r);
    }

    {  // p_term against the finite-difference derivative of a_zeta_33
        CheckResult r{"p_term matches d/dalpha2 of a_zeta_33", false, ""};
        double worst = 0.0;
        const double h = 1e-4;
        for (int k = 0; k < 5; ++k) {
            const Cx a1(rnd(0.05, 0.2), rnd(-0.1, 0.1));
            const Cx a2(rnd(0.05, 0.2), rnd(-0.1, 0.1));
            const Cx b(rnd(0.05, 0.2), rnd(-0.1, 0.1));
            auto f = [&](const Cx& a2s) {
                return a_zeta_33(-b, a2s, -a1, a1, a2, b, table).value;
            };
            const Cx fd = central_diff(f, a2, h);
            const Cx expect = p_term(a1 + b, a2 + b, table).value;
            worst = std::max(worst, std::abs(fd - expect) /
                                        std::max(1.0, std::abs(expect)));
        }
        r.pass = worst < 1e-6;
        r.detail = "max dev " + fmt(worst);
        out.push_back(r);
    }

    {  // q_term against the third mixed derivative (4th-order stencils)
        CheckResult r{"q_term matches the third mixed derivative of a_zeta_33", false, ""};
        double worst = 0.0;
        const double h = 1e-2;
        const double off[4] = {-2.0 * h, -h, h, 2.0 * h};
        const double w[4] = {1.0, -8.0, 8.0, -1.0};
        for (int k = 0; k < 2; ++k) {
            const Cx a1(rnd(0.05, 0.2), 0.0), a2(rnd(0.05, 0.2), 0.0), b(rnd(0.05, 0.2), 0.0);
            KahanCx acc;
            for (int ia = 0; ia < 4; ++ia)
                for (int ib = 0; ib < 4; ++ib)
                    for (int ic = 0; ic < 4; ++ic)
                        acc.add(w[ia] * w[ib] * w[ic] *
                                a_zeta_33(a1 + off[ia], a2 + off[ib], b + off[ic],
                                          a1, a2, b, table)
                                    .value);
            const Cx fd = acc.value() / std::pow(12.0 * h, 3.0);
            const Cx expect = q_term(a1 + b, a2 + b, table).value;
            worst = std::max(worst, std::abs(fd - expect) /
                                        std::max(1.0, std::abs(expect)));
        }
        r.pass = worst < 1e-4;
        r.detail = "max dev " + fmt(worst);
        out.push_back(r);
    }

    {  // 2/2 identities: A directly, B by the mixed second derivative
        CheckResult r{"a_zeta_22 derivatives reproduce a_term and b_term", false, ""};
        double worst = 0.0;
        const double h = 3e-4;
        for (int k = 0; k < 5; ++k) {
            const Cx a(rnd(0.05, 0.2), rnd(-0.1, 0.1));
            const Cx b(rnd(0.05, 0.2), rnd(-0.1, 0.1));
            worst = std::max(worst, rel_dev(a_zeta_22(-b, -a, a, b, table).value,
                                            a_term(a + b, table).value));
            const Cx fpp = a_zeta_22(a + h, b + h, a, b, table).value -
                           a_zeta_22(a + h, b - h, a, b, table).value -
                           a_zeta_22(a - h, b + h, a, b, table).value +
                           a_zeta_22(a - h, b - h, a, b, table).value;
            const Cx mixed = fpp / (4.0 * h * h);
            const Cx expect = -b_term(a + b, table).value;
            worst = std::max(worst, std::abs(mixed - expect) /
                                        std::max(1.0, std::abs(expect)));
        }
        r.pass = worst < 1e-6;
        r.detail = "max dev " + fmt(worst);
        out.push_back(r);
    }

    {  // closed-form t-integration against adaptive quadrature
        CheckResult r{"closed forms match t-quadrature (i3, i1, s, two-point)", false, ""};
        double worst = 0.0;
        const double T = 10000.0;
        for (int k = 0; k < 3; ++k) {
            const Cx a1(rnd(0.01, 0.1), rnd(-1.5, 1.5));
            const Cx a2(rnd(0.01, 0.1), rnd(-1.5, 1.5));
            const Cx b(rnd(0.01, 0.1), rnd(-1.5, 1.5));
            const Cx x = a1 + b, y = a2 + b;
            const Cx c1 = zeta(1.0 - x, em) * zeta(1.0 + x, em) *
                          (a_term(x, table).value *
                               (zeta_log_deriv(1.0 + (y - x), em) - zeta_log_deriv(1.0 + y, em)) +
                           p_term(x, y, table).value);
            const Cx c2 = zeta(1.0 - y, em) * zeta(1.0 + y, em) *
                          (a_term(y, table).value *
                               (zeta_log_deriv(1.0 + (x - y), em) - zeta_log_deriv(1.0 + x, em)) +
                           p_term(y, x, table).value);
            const Cx oracle = q_term(x, y, table).value * T +
                              c1 * kernel_quadrature(x, 0, T) +
                              c2 * kernel_quadrature(y, 0, T);
            worst = std::max(worst, rel_dev(i3(a1, a2, b, T, table, em).value, oracle));

            const Cx s = a1 + a2;
            const Cx o1 = zeta_log_deriv_prime(1.0 + s, em) * kernel_quadrature(Cx(0.0), 1, T) +
                          zeta(1.0 + s, em) * zeta(1.0 - s, em) * a_term(s, table).value *
                              kernel_quadrature(s, 1, T) -
                          b_term(s, table).value * kernel_quadrature(Cx(0.0), 1, T);
            worst = std::max(worst, rel_dev(i1(a1, a2, T, table, em).value, o1));
        }
        {  // s_term and two_point_bracket at a real argument
            const double xv = 1.0 + 2.0 * uni01(rng);
            const Cx ix(0.0, xv);
            const Cx os = 0.5 * kernel_quadrature(Cx(0.0), 2, T) +
                          (zeta_log_deriv_prime(1.0 + ix, em) - b_term(ix, table).value) *
                              kernel_quadrature(Cx(0.0), 0, T) +
                          zeta(1.0 + ix, em) * zeta(1.0 - ix, em) * a_term(ix, table).value *
                              kernel_quadrature(ix, 0, T);
            worst = std::max(worst, rel_dev(s_term(xv, T, table, em), os));
            const Cx ix2 = -ix;
            const Cx os2 = 0.5 * kernel_quadrature(Cx(0.0), 2, T) +
                           (zeta_log_deriv_prime(1.0 + ix2, em) - b_term(ix2, table).value) *
                               kernel_quadrature(Cx(0.0), 0, T) +
                           zeta(1.0 + ix2, em) * zeta(1.0 - ix2, em) *
                               a_term(ix2, table).value * kernel_quadrature(ix2, 0, T);
            worst = std::max(worst,
                             rel_dev(Cx(two_point_bracket(xv, T, table, em)), os + os2));
        }
        r.pass = worst < 1e-8;
        r.detail = "max rel dev " + fmt(worst);
        out.push_back(r);
    }

    {  // reflection and argument-swap symmetries
        CheckResult r{"Schwarz reflection and conjugate-swap symmetries", false, ""};
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            const Cx s(rnd(0.5, 3.0), rnd(-40.0, 40.0));
            worst = std::max(worst, rel_dev(zeta(std::conj(s), em), std::conj(zeta(s, em))));
            worst = std::max(worst, rel_dev(zeta_log_deriv(std::conj(s), em),
                                            std::conj(zeta_log_deriv(s, em))));
        }
        const double T = 75000.0;
        for (int k = 0; k < 3; ++k) {
            const Cx a1(rnd(0.02, 0.1), rnd(-0.5, 0.5));
            const Cx a2(rnd(0.02, 0.1), rnd(-0.5, 0.5));
            const Cx b(rnd(0.02, 0.1), rnd(-0.5, 0.5));
            worst = std::max(
                worst, rel_dev(i3(std::conj(a1), std::conj(a2), std::conj(b), T, table, em).value,
                               std::conj(i3(a1, a2, b, T, table, em).value)));
            worst = std::max(
                worst, rel_dev(i1(std::conj(a1), std::conj(b), T, table, em).value,
                               std::conj(i1(a1, b, T, table, em).value)));
        }
        r.pass = worst < 1e-8;
        r.detail = "max rel dev " + fmt(worst);
        out.push_back(r);
    }

    {  // bracket: realness of the unfolded sum, symmetry, parity
        CheckResult r{"bracket real, symmetric, even", false, ""};
        const double T = config.T;
        BracketDeps deps{table, em, 1e-6};
        const Cx unfolded = bracket_unfolded(5.0, 11.0, T, table, em);
        const double imag_rel = std::abs(unfolded.imag()) / std::abs(unfolded);
        const double b1 = bracket(5.0, 11.0, T, deps);
        const double b2 = bracket(11.0, 5.0, T, deps);
        const double b3 = bracket(-5.0, -11.0, T, deps);
        const double sym = std::abs(b1 - b2) / std::abs(b1);
        const double par = std::abs(b1 - b3) / std::abs(b1);
        const double fold = std::abs(b1 - unfolded.real()) / std::abs(b1);
        r.pass = imag_rel < 1e-6 && sym < 1e-8 && par < 1e-8 && fold < 1e-9;
        r.detail = "imag " + fmt(imag_rel) + ", swap " + fmt(sym) + ", parity " +
                   fmt(par) + ", fused-vs-generic " + fmt(fold);
        out.push_back(r);
    }

    {  // unitary-side invariants: translation, j3 continuity, residues, s_n
        CheckResult r{"j2/j3 translation invariance, residues, s_n limits", false, ""};
        double worst = 0.0;
        const int N = 5;
        const Cx t(0.013, -0.41);
        const Cx al(0.2, 0.3), be(0.15, -0.2);
        worst = std::max(worst, rel_dev(j2(al + t, be - t, N), j2(al, be, N)));
        const Cx a1(0.1, 0.7), a2(-0.05, 0.2), b3(0.3, -0.4);
        worst = std::max(worst, rel_dev(j3(a1 + t, a2 + t, b3 - t, N), j3(a1, a2, b3, N)));
        // continuity across the equal-argument branch (straddle the radius)
        worst = std::max(worst, rel_dev(j3(a1, a1 + Cx(1e-6 - 5e-13, 0.0), b3, N),
                                        j3(a1, a1 + Cx(1e-6 + 5e-13, 0.0), b3, N)));
        // residues by contour quadrature
        const Cx z1(0.0, 0.3), z2(0.0, -0.5);
        auto f3 = [&](Cx w) { return j3(z1, z2, -w, N); };
        worst = std::max(worst, std::abs(contour_residue(f3, z1, 0.01) + j2(z2, -z1, N)) /
                                    std::abs(j2(z2, -z1, N)));
        auto f2 = [&](Cx w) { return j2(w, -z1, N); };
        worst = std::max(worst,
                         std::abs(contour_residue(f2, z1, 0.01) - double(N)) / double(N));
        // s_n limits
        worst = std::max(worst, std::abs(s_n(0.0, 7) - 7.0));
        worst = std::max(worst, std::abs(s_n(kTwoPi / 7.0, 7)));
        r.pass = worst < 1e-8;
        r.detail = "max dev " + fmt(worst);
        out.push_back(r);
    }

    return out;
}

}  // namespace triplecorr
