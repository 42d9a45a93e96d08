#include "triplecorr/triple.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "triplecorr/config.hpp"

namespace triplecorr {

namespace {

// log(1+d) with the atanh fallback only where the series cannot reach
// full precision (small primes).
inline Cx log1p_fast(const Cx& d) {
    if (std::abs(d) > 3e-3) return clog1p(d);
    return d * (1.0 - d * (0.5 - d * (1.0 / 3.0 - d * (0.25 - d * 0.2))));
}

inline double circ_dist_to_lines(double v1, double v2) {
    return std::min({std::abs(v1), std::abs(v2), std::abs(v1 - v2)});
}

// per-prime P summand for argument pair (x, y) given the unit-modulus
// c_x = p^{-x}, c_y = p^{-y} and r1 = 1/p
inline Cx p_summand(const Cx& cx, const Cx& cy, double r1, double lp) {
    const Cx u1y = r1 * cy;
    const Cx u1x = r1 * cx;
    const Cx cy_over_cx = cy * std::conj(cx);  // |c_x| = 1
    const Cx u2ymx = r1 * r1 * cy_over_cx;
    const Cx u1ymx = r1 * cy_over_cx;
    return lp * ((u1y - u2ymx) / ((1.0 - 2.0 * r1 + u1x) * (1.0 - u1ymx)) -
                 u1y / (1.0 - u1y));
}

inline Cx q_summand(const Cx& cx, const Cx& cy, double r1, double lp) {
    const Cx u2 = r1 * r1 * cx * cy;
    return -lp * lp * lp * u2 / ((1.0 - r1 * cx) * (1.0 - r1 * cy));
}

}  // namespace

int configured_threads() {
    if (const char* env = std::getenv("TRIPLECORR_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

BracketPrimeTerms bracket_prime_terms(double v1, double v2, const PrimeTable& table) {
    const double vd = v1 - v2;
    KahanCx la1, la2, lad;           // log A accumulators
    KahanCx b1, b2, bd;              // B sums
    KahanCx q12, qm2d, q1d;          // Q sums
    KahanCx p12, p21, pm2d, pdm2, p1d, pd1;

    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = table.primes[i];
        const double lp = table.logs[i];
        const double r1 = 1.0 / p;
        const double pm1 = p - 1.0;

        // e^{-i g lp} - 1 = (-2 sin^2(g lp/2), -2 sin(g lp/2) cos(g lp/2))
        double s, c;
        s = std::sin(0.5 * v1 * lp);
        c = std::cos(0.5 * v1 * lp);
        const Cx em1(-2.0 * s * s, -2.0 * s * c);
        s = std::sin(0.5 * v2 * lp);
        c = std::cos(0.5 * v2 * lp);
        const Cx em2(-2.0 * s * s, -2.0 * s * c);
        s = std::sin(0.5 * vd * lp);
        c = std::cos(0.5 * vd * lp);
        const Cx emd(-2.0 * s * s, -2.0 * s * c);
        const Cx c1 = 1.0 + em1, c2 = 1.0 + em2, cd = 1.0 + emd;  // p^{-i g}

        // A factors
        Cx r = em1 / pm1;
        la1.add(log1p_fast(-r * r));
        r = em2 / pm1;
        la2.add(log1p_fast(-r * r));
        r = emd / pm1;
        lad.add(log1p_fast(-r * r));

        // B sums: p^{1+ig} - 1 = p conj(c_g) - 1
        Cx den = p * std::conj(c1) - 1.0;
        b1.add(lp * lp / (den * den));
        den = p * std::conj(c2) - 1.0;
        b2.add(lp * lp / (den * den));
        den = p * std::conj(cd) - 1.0;
        bd.add(lp * lp / (den * den));

        // Q sums for pairs (iv1,iv2), (-iv2,iD), (iv1,iD)
        q12.add(q_summand(c1, c2, r1, lp));
        qm2d.add(q_summand(std::conj(c2), cd, r1, lp));
        q1d.add(q_summand(c1, cd, r1, lp));

        // P sums for the six ordered pairs
        p12.add(p_summand(c1, c2, r1, lp));
        p21.add(p_summand(c2, c1, r1, lp));
        pm2d.add(p_summand(std::conj(c2), cd, r1, lp));
        pdm2.add(p_summand(cd, std::conj(c2), r1, lp));
        p1d.add(p_summand(c1, cd, r1, lp));
        pd1.add(p_summand(cd, c1, r1, lp));
    }

    BracketPrimeTerms out;
    out.a1 = std::exp(la1.value());
    out.a2 = std::exp(la2.value());
    out.ad = std::exp(lad.value());
    out.b1 = b1.value();
    out.b2 = b2.value();
    out.bd = bd.value();
    out.e1 = {out.a1, out.a2, out.a1 * p12.value(), out.a2 * p21.value(), q12.value()};
    out.e2 = {std::conj(out.a2), out.ad, std::conj(out.a2) * pm2d.value(),
              out.ad * pdm2.value(), qm2d.value()};
    out.e3 = {out.a1, out.ad, out.a1 * p1d.value(), out.ad * pd1.value(), q1d.value()};
    return out;
}

double bracket(double v1, double v2, double T, const BracketDeps& deps) {
    if (!(T > kTwoPi)) throw DomainError("bracket: T must exceed 2pi");
    if (circ_dist_to_lines(v1, v2) < deps.guard_band)
        throw SingularInput("bracket: (v1, v2) inside the singular-line band");

    const double vd = v1 - v2;
    const BracketPrimeTerms bt = bracket_prime_terms(v1, v2, deps.table);
    const Cx iv1(0.0, v1), iv2(0.0, v2), ivd(0.0, vd);

    // six I terms = 2 Re of the three below (the other three are their
    // conjugates by Schwarz reflection of every constituent)
    const Cx e1 = i3_from_parts(iv1, iv2, bt.e1, T, deps.em).value;      // I(iv1,iv2;0)
    const Cx e2 = i3_from_parts(-iv2, ivd, bt.e2, T, deps.em).value;     // I(0,iv1;-iv2)
    const Cx e3 = i3_from_parts(iv1, ivd, bt.e3, T, deps.em).value;      // I(0,-iv2;iv1)
    // six I_1 terms: sums are +-iv2, +-iv1, +-i(v1-v2)
    const Cx f1 = i1_from_parts(iv2, bt.a2, bt.b2, T, deps.em).value;
    const Cx f2 = i1_from_parts(iv1, bt.a1, bt.b1, T, deps.em).value;
    const Cx f3 = i1_from_parts(ivd, bt.ad, bt.bd, T, deps.em).value;

    const double sum = log_power_integral(3, T) +
                       2.0 * (e1.real() + e2.real() + e3.real()) +
                       2.0 * (f1.real() + f2.real() + f3.real());
    return ensure_finite(sum, "bracket");
}

GridStats grid_stats(const CorrelationGrid& g) {
    GridStats st{-1e300, 1e300, 0.0, 0};
    KahanSum acc;
    for (std::size_t i = 0; i < g.n1(); ++i) {
        for (std::size_t j = 0; j < g.n2(); ++j) {
            if (g.masked(i, j)) continue;
            const double v = g.value(i, j);
            st.max = std::max(st.max, v);
            st.min = std::min(st.min, v);
            acc.add(v);
            ++st.unmasked;
        }
    }
    st.mean = st.unmasked ? acc.value() / double(st.unmasked) : 0.0;
    return st;
}

CorrelationGrid theory_grid(double window, double step, double T, double mask_band,
                            const BracketDeps& deps, int threads) {
    if (!(window > 0) || !(step > 0) || step > window)
        throw DomainError("theory_grid: need 0 < step <= window");
    if (!(mask_band > 0))
        throw DomainError("theory_grid: mask_band must be positive "
                          "(pointwise evaluation on singular lines is undefined)");

    const std::size_t n = std::size_t(std::floor(window / step + 1e-9));
    CorrelationGrid grid;
    grid.T = T;
    grid.scale = CorrelationGrid::Scale::density;
    grid.normalization = "bracket/(T*L^3), L=log(T/2pi)";
    grid.v1_axis.resize(n);
    grid.v2_axis.resize(n);
    for (std::size_t k = 0; k < n; ++k) grid.v1_axis[k] = (double(k) + 0.5) * step;
    grid.v2_axis = grid.v1_axis;
    grid.values.assign(n * n, 0.0);
    grid.mask.assign(n * n, 0);

    const double L = std::log(T / kTwoPi);
    const double norm = T * L * L * L;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (circ_dist_to_lines(grid.v1_axis[i], grid.v2_axis[j]) < mask_band)
                grid.mask[i * n + j] = 1;

    const int nthreads = threads > 0 ? threads : configured_threads();
    auto run_rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (grid.mask[i * n + j]) continue;
                grid.values[i * n + j] =
                    bracket(grid.v1_axis[i], grid.v2_axis[j], T, deps) / norm;
            }
        }
    };
    if (nthreads <= 1 || n < 4) {
        run_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + std::size_t(nthreads) - 1) / std::size_t(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t lo = std::size_t(t) * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

double SampledFunction2D::interp(double v1, double v2) const {
    auto locate = [](const std::vector<double>& ax, double v, std::size_t& k, double& w) {
        if (v <= ax.front()) { k = 0; w = 0.0; return; }
        if (v >= ax.back()) { k = ax.size() - 2; w = 1.0; return; }
        const auto it = std::upper_bound(ax.begin(), ax.end(), v);
        k = std::size_t(it - ax.begin()) - 1;
        w = (v - ax[k]) / (ax[k + 1] - ax[k]);
    };
    std::size_t i, j;
    double wi, wj;
    locate(v1_axis, v1, i, wi);
    locate(v2_axis, v2, j, wj);
    return (1.0 - wi) * ((1.0 - wj) * at(i, j) + wj * at(i, j + 1)) +
           wi * ((1.0 - wj) * at(i + 1, j) + wj * at(i + 1, j + 1));
}

namespace {

void check_symmetric_grid(const SampledFunction2D& f) {
    if (f.v1_axis.size() < 2 || f.v1_axis != f.v2_axis)
        throw GridMismatch("test-function grid must be square with equal axes");
    if (f.values.size() != f.v1_axis.size() * f.v2_axis.size())
        throw GridMismatch("test-function grid has wrong value count");
    const auto& ax = f.v1_axis;
    const double h = ax[1] - ax[0];
    for (std::size_t k = 1; k < ax.size(); ++k)
        if (std::abs(ax[k] - ax[k - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw GridMismatch("test-function axis must be uniform");
    const std::size_t n = ax.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(ax[k] + ax[n - 1 - k]) > 1e-9)
            throw GridMismatch("test-function axis must be symmetric about zero");
        if (std::abs(ax[k]) < 0.25 * h)
            throw GridMismatch("test-function axis must not sample a singular line");
    }
}

}  // namespace

double integrate_against_test(const SampledFunction2D& f, double T,
                              const BracketDeps& deps) {
    check_symmetric_grid(f);
    const auto& ax = f.v1_axis;
    const std::size_t n = ax.size();
    const double h = ax[1] - ax[0];

    // Symmetric axes exclude v = 0 and the diagonal cells are skipped, so the
    // plain cell sum realizes the symmetric-pair principal value across all
    // three singular lines.
    KahanSum acc;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double fv = f.at(i, j);
            if (fv == 0.0) continue;
            acc.add(fv * bracket(ax[i], ax[j], T, deps));
        }
    }
    return acc.value() * h * h / (kTwoPi * kTwoPi * kTwoPi);
}

double sine_kernel_det(double v1, double v2) {
    auto S = [](double x) {
        const double px = kPi * x;
        if (std::abs(px) < 1e-4) return 1.0 - px * px / 6.0;
        return std::sin(px) / px;
    };
    const double a = S(v1), b = S(v2), c = S(v1 - v2);
    return 1.0 - c * c - a * a - b * b + 2.0 * a * b * c;
}

std::vector<LimitCheckRow> limit_check(double v1, double v2,
                                       const std::vector<double>& T_list,
                                       const BracketDeps& deps) {
    if (circ_dist_to_lines(v1, v2) < 1e-9)
        throw SingularInput("limit_check: (v1, v2) on a singular line");
    for (std::size_t k = 0; k < T_list.size(); ++k) {
        if (T_list[k] < 1e3) throw DomainError("limit_check: T entries must be >= 1e3");
        if (k && T_list[k] <= T_list[k - 1])
            throw DomainError("limit_check: T list must be ascending");
    }
    const double lim = sine_kernel_det(v1, v2);
    std::vector<LimitCheckRow> rows;
    rows.reserve(T_list.size());
    for (double T : T_list) {
        const double L = std::log(T / kTwoPi);
        const double scale = kTwoPi / L;
        // normalize by the bracket's own constant term, integral_0^T log^3;
        // it tends to T L^3 but removes the finite-T averaging deficit that
        // otherwise decays only like 1/L
        const double val =
            bracket(scale * v1, scale * v2, T, deps) / log_power_integral(3, T);
        rows.push_back({T, val, lim, std::abs(val - lim)});
    }
    return rows;
}

SumDecomposition full_sum_decomposition(const SampledFunction2D& f, double T,
                                        const BracketDeps& deps) {
    check_symmetric_grid(f);
    const auto& ax = f.v1_axis;
    const double h = ax[1] - ax[0];

    SumDecomposition out;
    out.distinct_triple = integrate_against_test(f, T, deps);

    // pair terms: the six s-integrals fold into two_point_bracket against the
    // restrictions of f to the three singular lines
    KahanSum pair;
    for (double v : ax) {
        const double fl = f.interp(0.0, v) + f.interp(v, 0.0) + f.interp(v, v);
        if (fl == 0.0) continue;
        pair.add(fl * two_point_bracket(v, T, deps.table, deps.em));
    }
    out.pair_terms = pair.value() * h / (kTwoPi * kTwoPi);

    out.single_term = f.interp(0.0, 0.0) * log_power_integral(1, T) / kTwoPi;
    return out;
}

}  // namespace triplecorr
