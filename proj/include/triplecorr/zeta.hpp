#ifndef TRIPLECORR_ZETA_HPP
#define TRIPLECORR_ZETA_HPP

#include <array>

#include "triplecorr/cxmath.hpp"

namespace triplecorr {

// Euler-Maclaurin evaluation of zeta and its first two derivatives on
// Re s >= -0.5, |Im s| <= 1e4. Accuracy is guaranteed (1e-10 relative,
// checked by the doubled-parameter self-test) for Re s >= 0.4, which covers
// every evaluation made by the moment formulas.
struct EulerMaclaurinParams {
    int cutoff_terms = 20;    // direct-sum length on top of ceil(|Im s|)
    int bernoulli_depth = 12; // number of B_{2k} correction terms

    void validate() const {
        if (cutoff_terms < 10) throw DomainError("cutoff_terms must be >= 10");
        if (bernoulli_depth < 2 || bernoulli_depth > 30)
            throw DomainError("bernoulli_depth must be in [2, 30]");
    }
};

// zeta(s); PoleAtOne if |s-1| < 1e-12, DomainError outside the region above.
Cx zeta(const Cx& s, const EulerMaclaurinParams& params = {});

// d^order/ds^order zeta(s), order in {0,1,2}, term-wise differentiated
// Euler-Maclaurin (never finite differences).
Cx zeta_derivative(const Cx& s, int order, const EulerMaclaurinParams& params = {});

// zeta'(s)/zeta(s). Within switch_radius of s = 1 a truncated Stieltjes
// Laurent branch replaces the direct ratio.
Cx zeta_log_deriv(const Cx& s, const EulerMaclaurinParams& params = {},
                  double switch_radius = 1e-3);

// (zeta'/zeta)'(s) = zeta''/zeta - (zeta'/zeta)^2, each factor computed
// independently; Laurent branch near s = 1 (leading term +1/(s-1)^2).
Cx zeta_log_deriv_prime(const Cx& s, const EulerMaclaurinParams& params = {},
                        double switch_radius = 1e-3);

// chi'/chi(1/2+it) ~ -log(t/2pi); DomainError for t <= 0.
double chi_log_deriv_asymptotic(double t);

// gamma_0..gamma_4, computed once by the accelerated limit definition
// gamma_n = lim_M [sum_{k<=M} log^n k / k - log^{n+1} M / (n+1)].
const std::array<double, 5>& stieltjes_constants();

namespace detail {
// Truncated Laurent expansions about s = 1+w (test hooks for the branch
// agreement checks).
Cx zeta_laurent(const Cx& w);
Cx zeta_deriv_laurent(const Cx& w);
Cx zeta_deriv2_laurent(const Cx& w);
}  // namespace detail

}  // namespace triplecorr

#endif
