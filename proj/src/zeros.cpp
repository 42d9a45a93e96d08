#include "triplecorr/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <thread>

#include "triplecorr/config.hpp"

namespace triplecorr {

namespace {

void check_histogram_args(const ZeroDataset& ds, double window, double bin) {
    if (ds.count == 0) throw DomainError("empty zero dataset");
    if (!(bin > 0) || bin > window || window > ds.T)
        throw DomainError("need 0 < bin <= window <= T");
}

std::size_t bin_count(double window, double bin) {
    return std::size_t(std::floor(window / bin + 1e-9));
}

}  // namespace

ZeroDataset load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open zero table: " + path);

    ZeroDataset ds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str() + start, &end);
        if (end == line.c_str() + start)
            throw ParseError("not a number: '" + line + "'", lineno);
        while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
        if (*end != '\0')
            throw ParseError("trailing garbage: '" + line + "'", lineno);
        if (!(v > 0.0))
            throw ParseError("ordinate must be positive", lineno);
        if (!std::isfinite(v)) throw ParseError("non-finite ordinate", lineno);
        ds.ordinates.push_back(v);
    }
    if (ds.ordinates.empty()) throw EmptyFile("zero table has no data: " + path);

    if (!std::is_sorted(ds.ordinates.begin(), ds.ordinates.end())) {
        std::fprintf(stderr, "warning: zero table %s not sorted; sorting\n", path.c_str());
        std::sort(ds.ordinates.begin(), ds.ordinates.end());
        ds.input_was_sorted = false;
    }
    for (std::size_t i = 1; i < ds.ordinates.size(); ++i) {
        if (ds.ordinates[i] == ds.ordinates[i - 1])
            throw ParseError("duplicate ordinate " + std::to_string(ds.ordinates[i]));
    }
    ds.count = ds.ordinates.size();
    ds.T = ds.ordinates.back();
    return ds;
}

Histogram1D empirical_two_point(const ZeroDataset& ds, double window, double bin) {
    check_histogram_args(ds, window, bin);
    Histogram1D h;
    h.bin = bin;
    h.T = ds.T;
    h.counts.assign(bin_count(window, bin), 0);
    h.window = double(h.counts.size()) * bin;

    const auto& g = ds.ordinates;
    for (std::size_t i = 1; i < g.size(); ++i) {
        for (std::size_t j = i; j-- > 0;) {
            const double d = g[i] - g[j];
            if (d > h.window) break;
            const std::size_t k = std::min(h.counts.size() - 1,
                                           std::size_t(d / bin));
            ++h.counts[k];
        }
    }
    const double L = std::log(ds.T / kTwoPi);
    const double norm = ds.T * (L / kTwoPi) * (L / kTwoPi) * bin;
    h.normalized.resize(h.counts.size());
    for (std::size_t k = 0; k < h.counts.size(); ++k)
        h.normalized[k] = double(h.counts[k]) / norm;
    h.normalization = "counts/(T*(L/2pi)^2*bin)";
    return h;
}

Histogram2D empirical_triple(const ZeroDataset& ds, double window, double bin,
                             int threads) {
    check_histogram_args(ds, window, bin);
    Histogram2D h;
    h.bin = bin;
    h.T = ds.T;
    h.n = bin_count(window, bin);
    h.window = double(h.n) * bin;
    h.counts.assign(h.n * h.n, 0);

    const auto& g = ds.ordinates;
    const int nthreads = threads > 0 ? threads : configured_threads();

    auto count_range = [&](std::size_t lo, std::size_t hi,
                           std::vector<std::int64_t>& counts) {
        std::vector<std::size_t> below;  // bin index of gamma1 - gamma_j
        for (std::size_t i = lo; i < hi; ++i) {
            below.clear();
            for (std::size_t j = i; j-- > 0;) {
                const double d = g[i] - g[j];
                if (d > h.window) break;
                below.push_back(std::min(h.n - 1, std::size_t(d / bin)));
            }
            for (std::size_t a = 0; a < below.size(); ++a)
                for (std::size_t b = 0; b < below.size(); ++b)
                    if (a != b) ++counts[below[a] * h.n + below[b]];
        }
    };

    if (nthreads <= 1 || g.size() < 256) {
        count_range(1, g.size(), h.counts);
    } else {
        std::vector<std::vector<std::int64_t>> parts(
            std::size_t(nthreads), std::vector<std::int64_t>(h.n * h.n, 0));
        std::vector<std::thread> pool;
        const std::size_t chunk = (g.size() + std::size_t(nthreads) - 1) / std::size_t(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t lo = std::max<std::size_t>(1, std::size_t(t) * chunk);
            const std::size_t hi = std::min(g.size(), std::size_t(t + 1) * chunk);
            if (lo >= hi) continue;
            pool.emplace_back(count_range, lo, hi, std::ref(parts[std::size_t(t)]));
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (std::size_t k = 0; k < h.counts.size(); ++k) h.counts[k] += part[k];
    }

    const double L = std::log(ds.T / kTwoPi);
    const double rho = L / kTwoPi;
    const double norm = ds.T * rho * rho * rho * bin * bin;
    h.normalized.resize(h.counts.size());
    for (std::size_t k = 0; k < h.counts.size(); ++k)
        h.normalized[k] = double(h.counts[k]) / norm;
    h.normalization = "counts/(T*(L/2pi)^3*bin^2)";
    return h;
}

CorrelationGrid to_grid(const Histogram2D& h, double mask_band) {
    CorrelationGrid grid;
    grid.T = h.T;
    grid.scale = CorrelationGrid::Scale::density;
    grid.normalization = h.normalization;
    grid.v1_axis.resize(h.n);
    for (std::size_t k = 0; k < h.n; ++k) grid.v1_axis[k] = h.center(k);
    grid.v2_axis = grid.v1_axis;
    grid.values.assign(h.n * h.n, 0.0);
    grid.mask.assign(h.n * h.n, 0);
    for (std::size_t i = 0; i < h.n; ++i) {
        for (std::size_t j = 0; j < h.n; ++j) {
            const double v1 = grid.v1_axis[i], v2 = grid.v2_axis[j];
            if (std::min({v1, v2, std::abs(v1 - v2)}) < mask_band) {
                grid.mask[i * h.n + j] = 1;
            } else {
                grid.values[i * h.n + j] = h.normalized[i * h.n + j];
            }
        }
    }
    return grid;
}

DiffStats diff_stats(const CorrelationGrid& empirical, const CorrelationGrid& theory) {
    if (empirical.n1() != theory.n1() || empirical.n2() != theory.n2())
        throw GridMismatch("diff_stats: grid shapes differ");
    for (std::size_t k = 0; k < empirical.n1(); ++k)
        if (std::abs(empirical.v1_axis[k] - theory.v1_axis[k]) > 1e-9)
            throw GridMismatch("diff_stats: v1 axes differ");
    for (std::size_t k = 0; k < empirical.n2(); ++k)
        if (std::abs(empirical.v2_axis[k] - theory.v2_axis[k]) > 1e-9)
            throw GridMismatch("diff_stats: v2 axes differ");
    if (empirical.mask != theory.mask)
        throw GridMismatch("diff_stats: masks differ");
    if (empirical.scale != theory.scale)
        throw GridMismatch("diff_stats: normalization scales differ");
    if (std::abs(empirical.T - theory.T) > 1e-3 * std::max(empirical.T, theory.T))
        throw GridMismatch("diff_stats: height cutoffs differ");

    DiffStats st;
    KahanSum sum, sum2, sumabs;
    for (std::size_t i = 0; i < empirical.n1(); ++i) {
        for (std::size_t j = 0; j < empirical.n2(); ++j) {
            if (empirical.masked(i, j)) continue;
            const double d = empirical.value(i, j) - theory.value(i, j);
            sum.add(d);
            sum2.add(d * d);
            sumabs.add(std::abs(d));
            st.max_abs = std::max(st.max_abs, std::abs(d));
            ++st.cells;
        }
    }
    if (st.cells) {
        st.mean = sum.value() / double(st.cells);
        st.mean_abs = sumabs.value() / double(st.cells);
        const double var = sum2.value() / double(st.cells) - st.mean * st.mean;
        st.stddev = var > 0 ? std::sqrt(var) : 0.0;
    }
    return st;
}

}  // namespace triplecorr
