#include "triplecorr/ratios.hpp"

#include <cmath>

namespace triplecorr {

namespace {
constexpr double kPoleRadius = 1e-12;

void check_T(double T) {
    if (!(T > 0)) throw DomainError("height cutoff T must be positive");
}
}  // namespace

Cx t_power_integral(const Cx& z, double T) {
    check_T(T);
    if (std::abs(z - 1.0) < kPoleRadius)
        throw PoleAtOne("t_power_integral: pole at z = 1");
    const double lU = std::log(T / kTwoPi);
    return kTwoPi * std::exp((1.0 - z) * lU) / (1.0 - z);
}

double log_power_integral(int k, double T) {
    check_T(T);
    if (k < 0 || k > 3) throw DomainError("log_power_integral: k must be in {0,1,2,3}");
    const double U = T / kTwoPi;
    const double l = std::log(U);
    double poly = 0.0;
    switch (k) {
        case 0: poly = 1.0; break;
        case 1: poly = l - 1.0; break;
        case 2: poly = l * l - 2.0 * l + 2.0; break;
        default: poly = l * l * l - 3.0 * l * l + 6.0 * l - 6.0; break;
    }
    return kTwoPi * U * poly;
}

Cx log_weighted_power_integral(const Cx& z, double T) {
    check_T(T);
    if (std::abs(z - 1.0) < kPoleRadius)
        throw PoleAtOne("log_weighted_power_integral: pole at z = 1");
    const double lU = std::log(T / kTwoPi);
    const Cx omz = 1.0 - z;
    return kTwoPi * std::exp(omz * lU) * (lU / omz - 1.0 / (omz * omz));
}

MomentResult i3_from_parts(const Cx& x, const Cx& y, const RatioParts& parts, double T,
                           const EulerMaclaurinParams& params) {
    if (std::abs(x) < kPoleRadius)
        throw SingularInput("i3: alpha1 + beta = 0 (zeta(1 +/- x) pole)");
    if (std::abs(y) < kPoleRadius)
        throw SingularInput("i3: alpha2 + beta = 0 (zeta(1 +/- y) pole)");
    if (std::abs(x - y) < kPoleRadius)
        throw SingularInput("i3: alpha1 = alpha2 (zeta'/zeta(1) pole)");

    Cx block1, block2;
    try {
        const Cx zx_p = zeta(1.0 + x, params);
        const Cx zx_m = zeta(1.0 - x, params);
        const Cx ld_ymx = zeta_log_deriv(1.0 + (y - x), params);
        const Cx ld_y = zeta_log_deriv(1.0 + y, params);
        block1 = zx_m * zx_p * (parts.a_x * (ld_ymx - ld_y) + parts.p_xy) *
                 t_power_integral(x, T);

        const Cx zy_p = zeta(1.0 + y, params);
        const Cx zy_m = zeta(1.0 - y, params);
        const Cx ld_xmy = zeta_log_deriv(1.0 + (x - y), params);
        const Cx ld_x = zeta_log_deriv(1.0 + x, params);
        block2 = zy_m * zy_p * (parts.a_y * (ld_xmy - ld_x) + parts.p_yx) *
                 t_power_integral(y, T);
    } catch (const PoleAtOne& e) {
        throw SingularInput(std::string("i3: ") + e.what());
    }
    return {ensure_finite(parts.q * T + block1 + block2, "i3"), T};
}

MomentResult i3(const Cx& alpha1, const Cx& alpha2, const Cx& beta, double T,
                const PrimeTable& table, const EulerMaclaurinParams& params) {
    check_T(T);
    const Cx x = alpha1 + beta;
    const Cx y = alpha2 + beta;
    if (std::abs(x) < kPoleRadius)
        throw SingularInput("i3: alpha1 + beta = 0");
    if (std::abs(y) < kPoleRadius)
        throw SingularInput("i3: alpha2 + beta = 0");
    RatioParts parts;
    parts.a_x = a_term(x, table).value;
    parts.a_y = a_term(y, table).value;
    parts.p_xy = p_term(x, y, table).value;
    parts.p_yx = p_term(y, x, table).value;
    parts.q = q_term(x, y, table).value;
    return i3_from_parts(x, y, parts, T, params);
}

MomentResult i1_from_parts(const Cx& s, const Cx& a_s, const Cx& b_s, double T,
                           const EulerMaclaurinParams& params) {
    if (std::abs(s) < kPoleRadius) throw SingularInput("i1: alpha + beta = 0");
    Cx v;
    try {
        const double lpi1 = log_power_integral(1, T);
        v = zeta_log_deriv_prime(1.0 + s, params) * lpi1 +
            zeta(1.0 + s, params) * zeta(1.0 - s, params) * a_s *
                log_weighted_power_integral(s, T) -
            b_s * lpi1;
    } catch (const PoleAtOne& e) {
        throw SingularInput(std::string("i1: ") + e.what());
    }
    return {ensure_finite(v, "i1"), T};
}

MomentResult i1(const Cx& alpha, const Cx& beta, double T, const PrimeTable& table,
                const EulerMaclaurinParams& params) {
    check_T(T);
    const Cx s = alpha + beta;
    if (std::abs(s) < kPoleRadius) throw SingularInput("i1: alpha + beta = 0");
    return i1_from_parts(s, a_term(s, table).value, b_term(s, table).value, T, params);
}

Cx s_term(double x, double T, const PrimeTable& table,
          const EulerMaclaurinParams& params) {
    check_T(T);
    if (x == 0.0) throw SingularInput("s_term: x = 0");
    const Cx ix(0.0, x);
    const Cx zp = zeta(1.0 + ix, params);
    const Cx zm = zeta(1.0 - ix, params);
    const Cx v = 0.5 * log_power_integral(2, T) +
                 (zeta_log_deriv_prime(1.0 + ix, params) - b_term(ix, table).value) * T +
                 zp * zm * a_term(ix, table).value * t_power_integral(ix, T);
    return ensure_finite(v, "s_term");
}

double two_point_bracket(double r, double T, const PrimeTable& table,
                         const EulerMaclaurinParams& params) {
    if (r == 0.0) throw SingularInput("two_point_bracket: r = 0");
    const Cx v = s_term(r, T, table, params) + s_term(-r, T, table, params);
    if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v)))
        throw NonFinite("two_point_bracket: imaginary residual too large");
    return v.real();
}

double one_point_count(double T) {
    if (!(T > kTwoPi)) throw DomainError("one_point_count: T must exceed 2pi");
    const double U = T / kTwoPi;
    return U * std::log(U) - U;
}

}  // namespace triplecorr
