#ifndef TRIPLECORR_RATIOS_HPP
#define TRIPLECORR_RATIOS_HPP

#include "triplecorr/primes.hpp"
#include "triplecorr/zeta.hpp"

namespace triplecorr {

struct MomentResult {
    Cx value;
    double t_upper = 0.0;  // the height cutoff T
};

// integral_0^T (t/2pi)^{-z} dt = 2pi (T/2pi)^{1-z}/(1-z); PoleAtOne at z = 1.
Cx t_power_integral(const Cx& z, double T);

// integral_0^T log^k(t/2pi) dt, k in {0,1,2,3}.
double log_power_integral(int k, double T);

// integral_0^T log(t/2pi) (t/2pi)^{-z} dt, the z-derivative of
// t_power_integral in closed form.
Cx log_weighted_power_integral(const Cx& z, double T);

// Prime-side inputs of the three-fold moment, x = alpha1+beta, y = alpha2+beta.
struct RatioParts {
    Cx a_x, a_y;    // A(x), A(y)
    Cx p_xy, p_yx;  // P(x,y), P(y,x)
    Cx q;           // Q(x,y)
};

// Moment of three logarithmic derivatives, closed form in t. SingularInput
// on the singular set (alpha1+beta = 0, alpha2+beta = 0, zeta pole hits).
MomentResult i3(const Cx& alpha1, const Cx& alpha2, const Cx& beta, double T,
                const PrimeTable& table, const EulerMaclaurinParams& params = {});

// Same with the prime objects supplied by the caller (grid evaluation path).
MomentResult i3_from_parts(const Cx& x, const Cx& y, const RatioParts& parts, double T,
                           const EulerMaclaurinParams& params = {});

// Log-weighted two-fold moment; depends on alpha+beta only.
MomentResult i1(const Cx& alpha, const Cx& beta, double T, const PrimeTable& table,
                const EulerMaclaurinParams& params = {});

MomentResult i1_from_parts(const Cx& s, const Cx& a_s, const Cx& b_s, double T,
                           const EulerMaclaurinParams& params = {});

// Pair-term integrand integrated in t:
// s(x) = int_0^T [ log^2(t/2pi)/2 + (zeta'/zeta)'(1+ix)
//                  + (t/2pi)^{-ix} zeta(1+ix) zeta(1-ix) A(ix) - B(ix) ] dt.
Cx s_term(double x, double T, const PrimeTable& table,
          const EulerMaclaurinParams& params = {});

// Two-point bracket integrated in t; equals s_term(r) + s_term(-r) and is
// real up to a 1e-9 residual.
double two_point_bracket(double r, double T, const PrimeTable& table,
                         const EulerMaclaurinParams& params = {});

// (T/2pi) log(T/2pi) - T/2pi, T > 2pi.
double one_point_count(double T);

}  // namespace triplecorr

#endif
