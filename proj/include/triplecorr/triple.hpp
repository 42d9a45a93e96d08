#ifndef TRIPLECORR_TRIPLE_HPP
#define TRIPLECORR_TRIPLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "triplecorr/ratios.hpp"

namespace triplecorr {

// 2-D sampled density over (v1, v2). Axes are cell centers with uniform
// step; mask flags cells excluded near the singular lines v1 = 0, v2 = 0,
// v1 = v2. Values at masked cells are zero and were never evaluated.
struct CorrelationGrid {
    std::vector<double> v1_axis, v2_axis;
    std::vector<double> values;       // row-major [i1 * n2 + i2]
    std::vector<std::uint8_t> mask;   // 1 = excluded
    enum class Scale { raw, density } scale = Scale::density;
    std::string normalization;        // human-readable descriptor
    double T = 0.0;

    std::size_t n1() const { return v1_axis.size(); }
    std::size_t n2() const { return v2_axis.size(); }
    double value(std::size_t i, std::size_t j) const { return values[i * n2() + j]; }
    bool masked(std::size_t i, std::size_t j) const { return mask[i * n2() + j] != 0; }
};

struct GridStats {
    double max, min, mean;
    std::size_t unmasked;
};
GridStats grid_stats(const CorrelationGrid& g);

struct BracketDeps {
    const PrimeTable& table;
    EulerMaclaurinParams em{};
    // SingularInput when (v1, v2) is closer than this to a singular line.
    // theory_grid masks with its own (wider) band on top.
    double guard_band = 1e-6;
};

// Prime-side inputs of one bracket evaluation, produced by a single fused
// sweep over the table. Matches the generic a/b/p/q_term values (tested).
struct BracketPrimeTerms {
    RatioParts e1, e2, e3;  // i3 parts for (x,y) = (iv1,iv2), (-iv2,iD), (iv1,iD)
    Cx a1, a2, ad;          // A(i v1), A(i v2), A(i (v1-v2))
    Cx b1, b2, bd;          // B at the same arguments
};
BracketPrimeTerms bracket_prime_terms(double v1, double v2, const PrimeTable& table);

// The thirteen-term bracket: log^3 integral, six three-fold moments, six
// log-weighted two-fold moments. Real by conjugate pairing.
double bracket(double v1, double v2, double T, const BracketDeps& deps);

// Normalized density grid: bracket/(T L^3), L = log(T/2pi). threads <= 0
// means configured_threads().
CorrelationGrid theory_grid(double window, double step, double T, double mask_band,
                            const BracketDeps& deps, int threads = 0);

// Test function sampled on a symmetric uniform grid (same axis in both
// directions, no sample on a singular line; zero must fall between samples).
struct SampledFunction2D {
    std::vector<double> v1_axis, v2_axis;
    std::vector<double> values;  // row-major
    double at(std::size_t i, std::size_t j) const { return values[i * v2_axis.size() + j]; }
    // bilinear interpolation, clamped to the sampled box
    double interp(double v1, double v2) const;
};

// (2pi)^{-3} integral of f times the bracket with symmetric-pair principal
// value treatment across the three singular lines.
double integrate_against_test(const SampledFunction2D& f, double T,
                              const BracketDeps& deps);

// 1 - S^2(v1-v2) - S^2(v1) - S^2(v2) + 2 S(v1)S(v2)S(v1-v2), S = sin(pi x)/(pi x).
double sine_kernel_det(double v1, double v2);

struct LimitCheckRow {
    double T;
    double scaled_value;
    double limit_value;
    double abs_error;
};

// Scaled bracket against the sine-kernel determinant along an ascending list
// of heights. The bracket at scaled coordinates (2 pi v / L) is normalized by
// integral_0^T log^3(t/2pi) dt, the asymptotic T L^3 scale.
std::vector<LimitCheckRow> limit_check(double v1, double v2,
                                       const std::vector<double>& T_list,
                                       const BracketDeps& deps);

// Decomposition of the full (not-necessarily-distinct) triple sum into the
// distinct-triple part, the pair terms and the single term.
struct SumDecomposition {
    double distinct_triple = 0.0;
    double pair_terms = 0.0;
    double single_term = 0.0;
    double total() const { return distinct_triple + pair_terms + single_term; }
};
SumDecomposition full_sum_decomposition(const SampledFunction2D& f, double T,
                                        const BracketDeps& deps);

}  // namespace triplecorr

#endif
