#include "triplecorr/primes.hpp"

#include <algorithm>
#include <cmath>

namespace triplecorr {

namespace {

constexpr std::uint64_t kLimitMin = 1000;
constexpr std::uint64_t kLimitMax = 100000000;
constexpr double kFactorFloor = 1e-8;

// Upper bound for integral_P^inf log^k t * t^{-a} dt, a > 1, k in [0,3].
double tail_integral(double P, double a, int k) {
    const double am1 = a - 1.0;
    if (am1 <= 1e-9) return 1e300;  // divergent at the declared boundary
    const double L = std::log(P);
    const double head = std::pow(P, -am1);
    switch (k) {
        case 0: return head / am1;
        case 1: return head * (L / am1 + 1.0 / (am1 * am1));
        case 2: return head * (L * L / am1 + 2.0 * L / (am1 * am1) + 2.0 / (am1 * am1 * am1));
        default:
            return head * (L * L * L / am1 + 3.0 * L * L / (am1 * am1) +
                           6.0 * L / (am1 * am1 * am1) + 6.0 / (am1 * am1 * am1 * am1));
    }
}

// Prime density bound 1/log t folded into a constant against log P.
double prime_density_factor(const PrimeTable& table) {
    return 2.6 / std::log(double(table.limit));
}

void check_half_plane(const Cx& x, const char* who) {
    if (x.real() <= -0.5)
        throw DomainError(std::string(who) + ": requires Re > -1/2");
}

}  // namespace

PrimeTable build_prime_table(std::uint64_t limit) {
    if (limit < kLimitMin) throw DomainError("build_prime_table: limit must be >= 1e3");
    if (limit > kLimitMax)
        throw ResourceError("build_prime_table: limit above the 1e8 memory budget");

    std::vector<std::uint8_t> composite(limit + 1, 0);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = 1;
    }
    PrimeTable table;
    table.limit = limit;
    table.primes.reserve(std::size_t(double(limit) / std::log(double(limit)) * 1.2) + 16);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (!composite[n]) table.primes.push_back(std::uint32_t(n));
    }
    table.logs.resize(table.primes.size());
    for (std::size_t i = 0; i < table.primes.size(); ++i)
        table.logs[i] = std::log(double(table.primes[i]));
    return table;
}

TailEstimate a_term(const Cx& x, const PrimeTable& table) {
    check_half_plane(x, "a_term");
    KahanCx logsum;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = table.primes[i];
        const Cx r = cexpm1(-x * table.logs[i]) / (p - 1.0);  // (p^{-x}-1)/(p-1)
        logsum.add(clog1p(-r * r));
    }
    const double sminus = std::max(0.0, -x.real());
    const double P = double(table.limit);
    const double tail =
        prime_density_factor(table) * 16.0 * tail_integral(P, 2.0 - 2.0 * sminus, 0);
    const Cx v = std::exp(logsum.value());
    return {ensure_finite(v, "a_term"), (1.0 + std::abs(v)) * tail};
}

TailEstimate b_term(const Cx& x, const PrimeTable& table) {
    check_half_plane(x, "b_term");
    KahanCx sum;
    const Cx e = 1.0 + x;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const Cx d = table.logs[i] / cexpm1(e * table.logs[i]);  // log p/(p^{1+x}-1)
        sum.add(d * d);
    }
    const double P = double(table.limit);
    const double tail =
        prime_density_factor(table) * 8.0 * tail_integral(P, 2.0 + 2.0 * x.real(), 2);
    return {ensure_finite(sum.value(), "b_term"), tail};
}

TailEstimate q_term(const Cx& x, const Cx& y, const PrimeTable& table) {
    check_half_plane(x, "q_term");
    check_half_plane(y, "q_term");
    KahanCx sum;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double lp = table.logs[i];
        const Cx u2xy = std::exp(-(2.0 + x + y) * lp);
        const Cx dx = -cexpm1(-(1.0 + x) * lp);  // 1 - p^{-1-x}
        const Cx dy = -cexpm1(-(1.0 + y) * lp);
        sum.add(-lp * lp * lp * u2xy / (dx * dy));
    }
    const double P = double(table.limit);
    const double tail = prime_density_factor(table) * 12.0 *
                        tail_integral(P, 2.0 + x.real() + y.real(), 3);
    return {ensure_finite(sum.value(), "q_term"), tail};
}

TailEstimate p_term(const Cx& x, const Cx& y, const PrimeTable& table) {
    check_half_plane(x, "p_term");
    check_half_plane(y, "p_term");
    if (x.real() - y.real() >= 0.75)
        throw DomainError("p_term: requires Re(x-y) < 3/4");

    const TailEstimate ax = a_term(x, table);
    KahanCx sum;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = table.primes[i];
        const double lp = table.logs[i];
        const Cx ex = std::exp(-x * lp);   // p^{-x}
        const Cx ey = std::exp(-y * lp);
        const Cx u1y = ey / p;
        const Cx u1x = ex / p;
        const Cx u2ymx = ey / ex / (p * p);  // p^{-(2+y-x)}
        const Cx u1ymx = ey / ex / p;
        const Cx den1 = (1.0 - 2.0 / p + u1x) * (1.0 - u1ymx);
        const Cx den2 = 1.0 - u1y;
        sum.add(lp * ((u1y - u2ymx) / den1 - u1y / den2));
    }
    const double P = double(table.limit);
    const double sx = x.real(), sy = y.real();
    const double m = std::max({0.0, -sx, sx - sy, -sy});
    const double tail =
        (std::abs(ax.value) + 1.0) * prime_density_factor(table) * 30.0 *
        (tail_integral(P, 2.0 + sy - m, 1) + tail_integral(P, 2.0 + sy - sx, 1));
    const Cx v = ax.value * sum.value();
    return {ensure_finite(v, "p_term"), tail + std::abs(sum.value()) * ax.tail_bound};
}

TailEstimate a_zeta_33(const Cx& a1, const Cx& a2, const Cx& b, const Cx& g1,
                       const Cx& g2, const Cx& d, const PrimeTable& table) {
    const Cx shifts[6] = {a1, a2, b, g1, g2, d};
    double smin = 1e9;
    for (const Cx& s : shifts) {
        if (s.real() <= -0.25)
            throw DomainError("a_zeta_33: all real parts must exceed -1/4");
        smin = std::min(smin, s.real());
    }

    KahanCx logsum;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = table.primes[i];
        const double lp = table.logs[i];
        const double r1 = 1.0 / p, r2 = r1 * r1;
        const Cx ea1 = std::exp(-a1 * lp), ea2 = std::exp(-a2 * lp);
        const Cx eb = std::exp(-b * lp), ed = std::exp(-d * lp);
        const Cx eg1 = std::exp(-g1 * lp), eg2 = std::exp(-g2 * lp);

        const Cx u_g1d = r1 * eg1 * ed, u_g2d = r1 * eg2 * ed;
        const Cx u_a1d = r1 * ea1 * ed, u_a2d = r1 * ea2 * ed;
        const Cx u_g1b = r1 * eg1 * eb, u_g2b = r1 * eg2 * eb;
        // bracket with the p^{b-d} blocks pre-combined so every summand is
        // O(p^{-3/4}) in the admissible region
        const Cx s_dev = -u_g1b + u_g1d - u_g2b + u_g2d + r2 * eg1 * eg2 * eb * eb -
                         r2 * eg1 * eg2 * eb * ed - u_a1d - u_a2d +
                         r2 * ea1 * ea2 * eb * ed;

        const Cx dens[4] = {u_a1d, u_a2d, u_g1b, u_g2b};
        const Cx nums[2] = {u_g1d, u_g2d};
        for (const Cx& u : nums) {
            if (std::abs(1.0 - u) < kFactorFloor)
                throw FactorNearZero("a_zeta_33: numerator factor near zero");
            logsum.add(clog1p(-u));
        }
        for (const Cx& u : dens) {
            if (std::abs(1.0 - u) < kFactorFloor)
                throw FactorNearZero("a_zeta_33: denominator factor near zero");
            logsum.add(-clog1p(-u));
        }
        if (std::abs(1.0 + s_dev) < kFactorFloor)
            throw FactorNearZero("a_zeta_33: bracket near zero");
        logsum.add(clog1p(s_dev));
    }
    const Cx v = std::exp(logsum.value());
    const double P = double(table.limit);
    const double tail = (1.0 + std::abs(v)) * prime_density_factor(table) * 100.0 *
                        tail_integral(P, 2.0 + 4.0 * std::min(0.0, smin), 0);
    return {ensure_finite(v, "a_zeta_33"), tail};
}

TailEstimate a_zeta_22(const Cx& a, const Cx& b, const Cx& g, const Cx& d,
                       const PrimeTable& table) {
    const Cx shifts[4] = {a, b, g, d};
    double smin = 1e9;
    for (const Cx& s : shifts) {
        if (s.real() <= -0.25)
            throw DomainError("a_zeta_22: all real parts must exceed -1/4");
        smin = std::min(smin, s.real());
    }
    KahanCx logsum;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = table.primes[i];
        const double lp = table.logs[i];
        const double r1 = 1.0 / p;
        const Cx ea = std::exp(-a * lp), eb = std::exp(-b * lp);
        const Cx eg = std::exp(-g * lp), ed = std::exp(-d * lp);
        const Cx u_gd = r1 * eg * ed, u_bg = r1 * eb * eg, u_ad = r1 * ea * ed;
        const Cx s_dev = -u_bg - u_ad + u_gd;
        if (std::abs(1.0 - u_gd) < kFactorFloor || std::abs(1.0 + s_dev) < kFactorFloor ||
            std::abs(1.0 - u_bg) < kFactorFloor || std::abs(1.0 - u_ad) < kFactorFloor)
            throw FactorNearZero("a_zeta_22: local factor near zero");
        logsum.add(clog1p(-u_gd) + clog1p(s_dev) - clog1p(-u_bg) - clog1p(-u_ad));
    }
    const Cx v = std::exp(logsum.value());
    const double P = double(table.limit);
    const double tail = (1.0 + std::abs(v)) * prime_density_factor(table) * 50.0 *
                        tail_integral(P, 2.0 + 4.0 * std::min(0.0, smin), 0);
    return {ensure_finite(v, "a_zeta_22"), tail};
}

}  // namespace triplecorr
