#ifndef TRIPLECORR_ORACLES_HPP
#define TRIPLECORR_ORACLES_HPP

#include <functional>

#include "triplecorr/cxmath.hpp"

namespace triplecorr {

// Independent numerical routes used by the self-test report and the test
// suites. None of these share the closed-form integration or product
// machinery they are used to check.

// Adaptive Simpson on [a, b]; tolerance is absolute, scaled by the caller.
Cx adaptive_simpson(const std::function<Cx(double)>& f, double a, double b,
                    double abs_tol, int max_depth = 32);

// integral_0^T log^k(t/2pi) (t/2pi)^{-z} dt by adaptive quadrature after the
// substitution t = 2pi e^u (the closed forms never enter).
Cx kernel_quadrature(const Cx& z, int k, double T);

// Residue of f at c by trapezoidal contour quadrature on |w - c| = radius.
Cx contour_residue(const std::function<Cx(Cx)>& f, const Cx& c, double radius,
                   int points = 64);

// Central difference (f(x+h) - f(x-h)) / 2h.
Cx central_diff(const std::function<Cx(Cx)>& f, const Cx& x, double h);

}  // namespace triplecorr

#endif
