#include "triplecorr/rmt.hpp"

#include <cmath>

namespace triplecorr {

namespace {

constexpr double kLatticeRadius = 1e-13;
constexpr double kEqualArgRadius = 1e-6;  // j3 series branch switch
constexpr double kCoincidenceRadius = 1e-4;

// Reduce Im x to (-pi, pi]; every z-family function is 2*pi*i periodic and
// e^{-Ns} picks up e^{2 pi i N k} = 1 for integer N.
Cx reduce(const Cx& x) {
    double im = x.imag();
    if (std::abs(im) > kPi) {
        im -= kTwoPi * std::round(im / kTwoPi);
    }
    return {x.real(), im};
}

void check_pole(const Cx& xr, const char* who) {
    if (std::abs(xr) < kLatticeRadius)
        throw PoleAtLatticePoint(std::string(who) + ": argument at 2*pi*i*k");
}

// e^{-Ns} z(s) z(-s) = -e^{-Ns}/(4 sinh^2(s/2)); reduced argument expected.
Cx g_pair(const Cx& s, int N) {
    const Cx sh = std::sinh(0.5 * s);
    return -std::exp(-double(N) * s) / (4.0 * sh * sh);
}

// 1/z(w) = 1 - e^{-w}, finite everywhere.
Cx z_inv(const Cx& w) { return -cexpm1(-reduce(w)); }

}  // namespace

Cx z_func(const Cx& x) {
    const Cx xr = reduce(x);
    check_pole(xr, "z_func");
    return ensure_finite(-1.0 / cexpm1(-xr), "z_func");
}

Cx z_log_deriv(const Cx& x) {
    const Cx xr = reduce(x);
    check_pole(xr, "z_log_deriv");
    return ensure_finite(-1.0 / cexpm1(xr), "z_log_deriv");
}

Cx z_log_deriv_prime(const Cx& x) {
    const Cx xr = reduce(x);
    check_pole(xr, "z_log_deriv_prime");
    const Cx em = cexpm1(xr);
    return ensure_finite(std::exp(xr) / (em * em), "z_log_deriv_prime");
}

Cx ratios_22(const Cx& alpha, const Cx& beta, const Cx& gamma, const Cx& delta, int N) {
    if (N < 1) throw DomainError("ratios_22: N must be >= 1");
    if (gamma.real() <= 0 || delta.real() <= 0)
        throw DomainError("ratios_22: requires Re gamma, Re delta > 0");
    const Cx term1 = z_func(alpha + beta) * z_func(gamma + delta) * z_inv(alpha + delta) *
                     z_inv(beta + gamma);
    const Cx term2 = std::exp(-double(N) * (alpha + beta)) * z_func(-beta - alpha) *
                     z_func(gamma + delta) * z_inv(-beta + delta) * z_inv(-alpha + gamma);
    return ensure_finite(term1 + term2, "ratios_22");
}

Cx ratios_33(const Cx& alpha1, const Cx& alpha2, const Cx& beta, const Cx& gamma1,
             const Cx& gamma2, const Cx& delta, int N) {
    if (N < 1) throw DomainError("ratios_33: N must be >= 1");
    if (gamma1.real() <= 0 || gamma2.real() <= 0 || delta.real() <= 0)
        throw DomainError("ratios_33: requires Re gamma_1, Re gamma_2, Re delta > 0");
    const Cx zg = z_func(gamma1 + delta) * z_func(gamma2 + delta);
    const Cx term1 = z_func(alpha1 + beta) * z_func(alpha2 + beta) * zg *
                     z_inv(alpha1 + delta) * z_inv(alpha2 + delta) *
                     z_inv(beta + gamma1) * z_inv(beta + gamma2);
    const Cx term2 = std::exp(-double(N) * (alpha1 + beta)) * z_func(-beta - alpha1) *
                     z_func(alpha2 - alpha1) * zg * z_inv(-beta + delta) *
                     z_inv(alpha2 + delta) * z_inv(-alpha1 + gamma1) *
                     z_inv(-alpha1 + gamma2);
    const Cx term3 = std::exp(-double(N) * (alpha2 + beta)) * z_func(-beta - alpha2) *
                     z_func(alpha1 - alpha2) * zg * z_inv(-beta + delta) *
                     z_inv(alpha1 + delta) * z_inv(-alpha2 + gamma1) *
                     z_inv(-alpha2 + gamma2);
    return ensure_finite(term1 + term2 + term3, "ratios_33");
}

Cx j2(const Cx& alpha, const Cx& beta, int N) {
    if (N < 1) throw DomainError("j2: N must be >= 1");
    const Cx s = reduce(alpha + beta);
    check_pole(s, "j2");
    return ensure_finite(z_log_deriv_prime(s) + g_pair(s, N), "j2");
}

Cx j3(const Cx& alpha1, const Cx& alpha2, const Cx& beta, int N) {
    if (N < 1) throw DomainError("j3: N must be >= 1");
    const Cx s1 = reduce(alpha1 + beta);
    const Cx eps = reduce(alpha2 - alpha1);
    // keep s2 coherent with s1 when the two arguments nearly coincide mod
    // 2*pi*i, so the midpoint below stays next to both
    const Cx s2 = (std::abs(eps) < kEqualArgRadius) ? s1 + eps : reduce(alpha2 + beta);
    check_pole(s1, "j3");
    check_pole(s2, "j3");

    const Cx G1 = g_pair(s1, N);
    const Cx G2 = g_pair(s2, N);

    if (std::abs(eps) < kEqualArgRadius) {
        // z'/z(eps) + z'/z(-eps) = 1 exactly, so
        //   j3 = G(s2) + z'/z(eps) (G(s1) - G(s2)) - G(s1) l(s2) - G(s2) l(s1)
        // with G(s1)-G(s2) from a midpoint series to dodge the cancellation.
        const Cx m = 0.5 * (s1 + s2);
        const Cx Gm = g_pair(m, N);
        const Cx lq = z_log_deriv(m);        // z'/z(m)
        const Cx lgp = -double(N) + 2.0 * lq - 1.0;   // (log G)'
        const Cx lp = z_log_deriv_prime(m);
        const Cx em = cexpm1(m);
        const Cx lpp = -std::exp(m) * (std::exp(m) + 1.0) / (em * em * em);  // (z'/z)''
        const Cx Gp = Gm * lgp;
        const Cx Gppp = Gm * (lgp * lgp * lgp + 3.0 * lgp * (2.0 * lp) + 2.0 * lpp);
        // (-1/e + 1/2 - e/12 + e^3/720)(-e G' - e^3 G'''/24)
        const Cx e2 = eps * eps;
        const Cx series = Gp * (1.0 - 0.5 * eps + e2 / 12.0) + Gppp * e2 / 24.0;
        return ensure_finite(
            G2 + series - G1 * z_log_deriv(s2) - G2 * z_log_deriv(s1), "j3");
    }
    return ensure_finite(G1 * (z_log_deriv(eps) - z_log_deriv(s2)) +
                             G2 * (z_log_deriv(-eps) - z_log_deriv(s1)),
                         "j3");
}

double s_n(double theta, int N) {
    if (N < 1) throw DomainError("s_n: N must be >= 1");
    const double k = std::round(theta / kTwoPi);
    const double r = theta - kTwoPi * k;
    // S_N(theta + 2 pi k) = (-1)^{k(N-1)} S_N(theta)
    const double sign = (std::llround(k) * (N - 1)) % 2 == 0 ? 1.0 : -1.0;
    if (std::abs(r) < 1e-8) {
        return sign * N * (1.0 - (double(N) * N - 1.0) * r * r / 24.0);
    }
    return sign * std::sin(0.5 * N * r) / std::sin(0.5 * r);
}

double gaudin_det(double t1, double t2, double t3, int N) {
    const double a = s_n(t2 - t1, N);
    const double b = s_n(t3 - t1, N);
    const double c = s_n(t3 - t2, N);
    const double d = double(N);
    return d * d * d + 2.0 * a * b * c - d * (a * a + b * b + c * c);
}

double t3_integrand(double t1, double t2, double t3, int N) {
    if (N < 1) throw DomainError("t3_integrand: N must be >= 1");
    const double gaps[3] = {t1 - t2, t1 - t3, t2 - t3};
    for (double g : gaps) {
        const double circ = std::abs(g - kTwoPi * std::round(g / kTwoPi));
        if (circ < kCoincidenceRadius)
            throw SingularInput("t3_integrand: angles nearly coincident");
    }
    const Cx i1(0.0, t1), i2(0.0, t2), i3(0.0, t3);
    Cx sum = j3(i1, i2, -i3, N) + j3(i1, i3, -i2, N) + j3(i2, i3, -i1, N) +
             j3(-i1, -i2, i3, N) + j3(-i1, -i3, i2, N) + j3(-i2, -i3, i1, N);
    sum += double(N) * (j2(-i1, i3, N) + j2(-i2, i3, N) + j2(-i1, i2, N) +
                        j2(-i3, i2, N) + j2(-i2, i1, N) + j2(-i3, i1, N));
    sum += double(N) * double(N) * double(N);
    if (std::abs(sum.imag()) > 1e-8 * std::max(1.0, std::abs(sum)))
        throw NonFinite("t3_integrand: imaginary residual too large");
    return ensure_finite(sum.real(), "t3_integrand");
}

double t3_against_test(const SampledFunction3D& f, int N) {
    if (N < 1) throw DomainError("t3_against_test: N must be >= 1");
    const std::size_t M = f.axis.size();
    if (M < 2 || f.values.size() != M * M * M)
        throw GridMismatch("t3_against_test: values must be a full MxMxM grid");
    const double h = f.axis[1] - f.axis[0];
    for (std::size_t i = 1; i < M; ++i) {
        if (std::abs(f.axis[i] - f.axis[i - 1] - h) > 1e-9 * std::max(1.0, h))
            throw GridMismatch("t3_against_test: axis must be uniform");
    }
    if (std::abs(double(M) * h - kTwoPi) > 1e-6)
        throw GridMismatch("t3_against_test: axis must cover a full period");

    KahanSum sum;
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j)
            for (std::size_t k = 0; k < M; ++k)
                sum.add(f.at(i, j, k) *
                        gaudin_det(f.axis[i], f.axis[j], f.axis[k], N));
    return sum.value() / (double(M) * double(M) * double(M));
}

}  // namespace triplecorr
