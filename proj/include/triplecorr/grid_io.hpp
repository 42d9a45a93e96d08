#ifndef TRIPLECORR_GRID_IO_HPP
#define TRIPLECORR_GRID_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "triplecorr/triple.hpp"
#include "triplecorr/zeros.hpp"

namespace triplecorr {

// Plain-text CSV: '#' header lines carrying T, step, mask_band, normalization
// and any extra keys, then "v1,v2,value,mask" rows, then a '# stats' trailer
// with max/min/mean over unmasked cells. Deterministic byte-for-byte for a
// fixed grid.
void write_grid_csv(std::ostream& out, const CorrelationGrid& grid,
                    const std::map<std::string, std::string>& extra = {});

CorrelationGrid read_grid_csv(std::istream& in);

void write_histogram_csv(std::ostream& out, const Histogram1D& h);

// Shared numeric formatting (12 significant digits).
std::string format_double(double v);

}  // namespace triplecorr

#endif
