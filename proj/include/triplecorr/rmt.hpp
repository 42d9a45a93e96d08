#ifndef TRIPLECORR_RMT_HPP
#define TRIPLECORR_RMT_HPP

#include <vector>

#include "triplecorr/cxmath.hpp"

namespace triplecorr {

// z(x) = 1/(1-e^{-x}), the unitary-group stand-in for zeta(1+x). All three
// are 2*pi*i periodic and evaluated cancellation-safe through complex expm1;
// PoleAtLatticePoint at x = 2*pi*i*k.
Cx z_func(const Cx& x);
Cx z_log_deriv(const Cx& x);        // z'/z(x) = -1/(e^x - 1)
Cx z_log_deriv_prime(const Cx& x);  // (z'/z)'(x) = e^x/(e^x - 1)^2

// Averages of ratios of characteristic polynomials over U(N), closed forms.
// Re gamma, Re delta > 0 (and Re gamma_1, Re gamma_2 > 0 for the 3/3 case).
Cx ratios_22(const Cx& alpha, const Cx& beta, const Cx& gamma, const Cx& delta, int N);
Cx ratios_33(const Cx& alpha1, const Cx& alpha2, const Cx& beta, const Cx& gamma1,
             const Cx& gamma2, const Cx& delta, int N);

// J(alpha;beta) = (z'/z)'(alpha+beta) + e^{-N(alpha+beta)} z(alpha+beta) z(-alpha-beta).
Cx j2(const Cx& alpha, const Cx& beta, int N);

// J(alpha1,alpha2;beta), symmetric in alpha1 <-> alpha2, analytic across
// alpha1 = alpha2 (explicit series branch below |alpha1-alpha2| = 1e-6).
Cx j3(const Cx& alpha1, const Cx& alpha2, const Cx& beta, int N);

// sin(N theta/2)/sin(theta/2) with its removable singularities filled in.
double s_n(double theta, int N);

// det_{3x3} S_N(theta_k - theta_j).
double gaudin_det(double t1, double t2, double t3, int N);

// The thirteen-term unitary bracket: six three-fold J's, N times six two-fold
// J's, plus N^3. Equals gaudin_det pointwise; refuses (SingularInput) when two
// angles are closer than 1e-4 on the circle, where naive evaluation cancels
// catastrophically (callers use gaudin_det there).
double t3_integrand(double t1, double t2, double t3, int N);

// f sampled on a uniform periodic grid over [-pi,pi)^3 (same axis per
// dimension, endpoint excluded).
struct SampledFunction3D {
    std::vector<double> axis;
    std::vector<double> values;  // [i*M*M + j*M + k]
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t M = axis.size();
        return values[(i * M + j) * M + k];
    }
};

// (2pi)^{-3} integral of f times the Gaudin determinant (entire; no principal
// values needed).
double t3_against_test(const SampledFunction3D& f, int N);

}  // namespace triplecorr

#endif
