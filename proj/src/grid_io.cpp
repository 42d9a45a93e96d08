#include "triplecorr/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace triplecorr {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_grid_csv(std::ostream& out, const CorrelationGrid& grid,
                    const std::map<std::string, std::string>& extra) {
    const std::size_t n1 = grid.n1(), n2 = grid.n2();
    const double step1 = n1 > 1 ? grid.v1_axis[1] - grid.v1_axis[0] : 0.0;
    out << "# correlation grid\n";
    out << "# T=" << format_double(grid.T) << "\n";
    out << "# n1=" << n1 << " n2=" << n2 << " step=" << format_double(step1) << "\n";
    out << "# scale=" << (grid.scale == CorrelationGrid::Scale::density ? "density" : "raw")
        << "\n";
    out << "# normalization=" << grid.normalization << "\n";
    for (const auto& [k, v] : extra) out << "# " << k << "=" << v << "\n";
    out << "v1,v2,value,mask\n";
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            out << format_double(grid.v1_axis[i]) << ',' << format_double(grid.v2_axis[j])
                << ',' << format_double(grid.value(i, j)) << ','
                << (grid.masked(i, j) ? 1 : 0) << "\n";
        }
    }
    const GridStats st = grid_stats(grid);
    out << "# stats max=" << format_double(st.max) << " min=" << format_double(st.min)
        << " mean=" << format_double(st.mean) << " unmasked=" << st.unmasked << "\n";
}

CorrelationGrid read_grid_csv(std::istream& in) {
    CorrelationGrid grid;
    std::string line;
    std::size_t lineno = 0;
    bool have_T = false, have_scale = false;
    std::vector<double> v1s, v2s, vals;
    std::vector<std::uint8_t> masks;

    auto header_value = [](const std::string& l, const char* key) -> std::string {
        const std::string pat = std::string(key) + "=";
        const auto pos = l.find(pat);
        if (pos == std::string::npos) return {};
        const auto end = l.find_first_of(" \t", pos + pat.size());
        return l.substr(pos + pat.size(),
                        end == std::string::npos ? std::string::npos : end - pos - pat.size());
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (auto v = header_value(line, "T"); !v.empty() && !have_T) {
                grid.T = std::stod(v);
                have_T = true;
            }
            if (auto v = header_value(line, "scale"); !v.empty() && !have_scale) {
                grid.scale = (v == "raw") ? CorrelationGrid::Scale::raw
                                          : CorrelationGrid::Scale::density;
                have_scale = true;
            }
            if (auto v = header_value(line, "normalization"); !v.empty())
                grid.normalization = v;
            continue;
        }
        if (line.rfind("v1,", 0) == 0) continue;  // column header
        double v1, v2, val;
        int mask;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%d", &v1, &v2, &val, &mask) != 4)
            throw ParseError("bad grid row: '" + line + "'", lineno);
        v1s.push_back(v1);
        v2s.push_back(v2);
        vals.push_back(val);
        masks.push_back(std::uint8_t(mask != 0));
    }
    if (vals.empty()) throw EmptyFile("grid file has no rows");

    // rows are emitted v2-fastest; recover the axes
    std::size_t n2 = 1;
    while (n2 < v2s.size() && v2s[n2] != v2s[0]) ++n2;
    if (v2s.size() % n2 != 0)
        throw ParseError("grid rows do not form a rectangle");
    const std::size_t n1 = v2s.size() / n2;
    grid.v2_axis.assign(v2s.begin(), v2s.begin() + std::ptrdiff_t(n2));
    grid.v1_axis.resize(n1);
    for (std::size_t i = 0; i < n1; ++i) grid.v1_axis[i] = v1s[i * n2];
    grid.values = std::move(vals);
    grid.mask = std::move(masks);
    if (!have_T) throw ParseError("grid file missing '# T=' header");
    return grid;
}

void write_histogram_csv(std::ostream& out, const Histogram1D& h) {
    out << "# two-point histogram\n";
    out << "# T=" << format_double(h.T) << "\n";
    out << "# bin=" << format_double(h.bin) << " window=" << format_double(h.window) << "\n";
    out << "# normalization=" << h.normalization << "\n";
    out << "separation,count,normalized\n";
    double maxv = 0.0, sum = 0.0;
    for (std::size_t k = 0; k < h.counts.size(); ++k) {
        out << format_double(h.center(k)) << ',' << h.counts[k] << ','
            << format_double(h.normalized[k]) << "\n";
        maxv = std::max(maxv, h.normalized[k]);
        sum += h.normalized[k];
    }
    out << "# stats max=" << format_double(maxv) << " mean="
        << format_double(h.counts.empty() ? 0.0 : sum / double(h.counts.size())) << "\n";
}

}  // namespace triplecorr
