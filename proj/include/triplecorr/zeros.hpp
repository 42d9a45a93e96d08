#ifndef TRIPLECORR_ZEROS_HPP
#define TRIPLECORR_ZEROS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "triplecorr/triple.hpp"

namespace triplecorr {

// Sorted positive zero ordinates (unscaled gamma values).
struct ZeroDataset {
    std::vector<double> ordinates;
    double T = 0.0;          // largest ordinate
    std::size_t count = 0;
    bool input_was_sorted = true;
};

// Plain text, one decimal ordinate per line, '#' comment lines ignored.
// Unsorted input is sorted (flagged); duplicates and non-positive entries are
// rejected with the offending line number.
ZeroDataset load_zeros(const std::string& path);

struct Histogram1D {
    double bin = 0.0;
    double window = 0.0;
    double T = 0.0;
    std::vector<std::int64_t> counts;
    std::vector<double> normalized;  // counts / (T (L/2pi)^2 bin)
    std::string normalization;
    double center(std::size_t k) const { return (double(k) + 0.5) * bin; }
};

struct Histogram2D {
    double bin = 0.0;
    double window = 0.0;
    double T = 0.0;
    std::size_t n = 0;  // bins per axis
    std::vector<std::int64_t> counts;     // [i*n+j]
    std::vector<double> normalized;       // counts / (T (L/2pi)^3 bin^2)
    std::string normalization;
    double center(std::size_t k) const { return (double(k) + 0.5) * bin; }
};

// Ordered pairs gamma1 > gamma2 with gap in (0, window], binned.
Histogram1D empirical_two_point(const ZeroDataset& ds, double window, double bin);

// Ordered distinct triples binned by (gamma1-gamma2, gamma1-gamma3) over
// (0, window]^2. Edge effects near gamma ~ 0 and gamma ~ T are left
// uncorrected (a window-sized sliver of the anchor range).
Histogram2D empirical_triple(const ZeroDataset& ds, double window, double bin,
                             int threads = 0);

// Histogram as a correlation grid on bin-center axes with the standard
// singular-line mask, directly subtractable from a theory grid of the same
// window/step.
CorrelationGrid to_grid(const Histogram2D& h, double mask_band);

struct DiffStats {
    double mean = 0.0;
    double stddev = 0.0;
    double mean_abs = 0.0;
    double max_abs = 0.0;
    std::size_t cells = 0;
};

// Statistics of (empirical - theory) over unmasked cells; GridMismatch unless
// axes, masks and normalization scale agree.
DiffStats diff_stats(const CorrelationGrid& empirical, const CorrelationGrid& theory);

}  // namespace triplecorr

#endif
