#ifndef TRIPLECORR_PRIMES_HPP
#define TRIPLECORR_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "triplecorr/cxmath.hpp"

namespace triplecorr {

// Sieved primes up to limit with cached logarithms. Immutable after
// construction; shared read-only across threads.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;
    std::vector<double> logs;
};

// 1e3 <= limit <= 1e8; ResourceError above the memory budget.
PrimeTable build_prime_table(std::uint64_t limit);

// Value of a truncated prime sum/product together with a bound on the
// discarded tail. The bound is generous by construction; doubling the sieve
// limit moves the value by less than it.
struct TailEstimate {
    Cx value;
    double tail_bound = 0.0;
};

// A(x) = prod_p (1-p^{-1-x})(1-2/p+p^{-1-x})/(1-1/p)^2
//      = prod_p [1 - ((p^{-x}-1)/(p-1))^2],  Re x > -1/2.
TailEstimate a_term(const Cx& x, const PrimeTable& table);

// B(x) = sum_p (log p / (p^{1+x}-1))^2,  Re x > -1/2.
TailEstimate b_term(const Cx& x, const PrimeTable& table);

// Q(x,y) = -sum_p log^3 p / (p^{2+x+y}(1-p^{-1-x})(1-p^{-1-y})).
TailEstimate q_term(const Cx& x, const Cx& y, const PrimeTable& table);

// P(x,y) = A(x) * sum_p log p [ (u_{1+y} - u_{2+y-x}) /
//              ((1-2/p+u_{1+x})(1-u_{1+y-x})) - u_{1+y}/(1-u_{1+y}) ],
// u_z = p^{-z}. Equivalent to the product-times-sum display and pinned to
// the finite-difference derivative of a_zeta_33 (first argument is the one
// carried by the prefactor A and the t-power block). Requires Re x, Re y
// > -1/2 and Re(x-y) < 3/4.
TailEstimate p_term(const Cx& x, const Cx& y, const PrimeTable& table);

// 3-over-3 ratios prime product; all six real parts must exceed -1/4.
// FactorNearZero if any local factor has modulus < 1e-8.
TailEstimate a_zeta_33(const Cx& a1, const Cx& a2, const Cx& b, const Cx& g1,
                       const Cx& g2, const Cx& d, const PrimeTable& table);

// 2-over-2 analogue.
TailEstimate a_zeta_22(const Cx& a, const Cx& b, const Cx& g, const Cx& d,
                       const PrimeTable& table);

}  // namespace triplecorr

#endif
