#include "triplecorr/zerofinder.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "triplecorr/cxmath.hpp"
#include "triplecorr/zeta.hpp"

namespace triplecorr {

namespace {

constexpr double kCrossover = 400.0;  // Euler-Maclaurin below, Riemann-Siegel above

// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p); removable zeros of the
// denominator at p = 1/4, 3/4 handled by a symmetric nudge.
double rs_psi(double p) {
    double c = std::cos(kTwoPi * p);
    if (std::abs(c) < 1e-5) {
        const double h = 2e-4;
        return 0.5 * (rs_psi(p - h) + rs_psi(p + h));
    }
    return std::cos(kTwoPi * (p * p - p - 0.0625)) / c;
}

}  // namespace

double riemann_siegel_theta(double t) {
    const double u = t / 2.0;
    return u * std::log(t / kTwoPi) - u - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t) + 31.0 / (80640.0 * std::pow(t, 5));
}

HardyZ::HardyZ(double t_max) : crossover_(kCrossover) {
    const std::size_t nmax = std::size_t(std::sqrt(t_max / kTwoPi)) + 2;
    logn_.resize(nmax + 1);
    rsqrtn_.resize(nmax + 1);
    for (std::size_t n = 1; n <= nmax; ++n) {
        logn_[n] = std::log(double(n));
        rsqrtn_[n] = 1.0 / std::sqrt(double(n));
    }
}

double HardyZ::operator()(double t) const {
    const double theta = riemann_siegel_theta(t);
    if (t < crossover_) {
        EulerMaclaurinParams params;
        const Cx z = zeta(Cx(0.5, t), params);
        const Cx rot(std::cos(theta), std::sin(theta));
        return (rot * z).real();
    }
    const double tau = std::sqrt(t / kTwoPi);
    const std::size_t m = std::size_t(tau);
    double sum = 0.0;
    for (std::size_t n = 1; n <= m; ++n)
        sum += rsqrtn_[n] * std::cos(theta - t * logn_[n]);
    sum *= 2.0;
    const double p = tau - double(m);
    const double corr = ((m % 2 == 1) ? 1.0 : -1.0) * rs_psi(p) / std::sqrt(tau);
    return sum + corr;
}

namespace {

// Bisect a sign change of Z in [a, b] to ~1e-10.
double bisect_zero(const HardyZ& Z, double a, double b, double fa) {
    for (int iter = 0; iter < 64 && b - a > 1e-10; ++iter) {
        const double m = 0.5 * (a + b);
        const double fm = Z(m);
        if (fm == 0.0) return m;
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Scan [a, b] at fine resolution to catch close pairs that the coarse pass
// stepped over; appends any zeros found.
void rescan_interval(const HardyZ& Z, double a, double b, int pieces,
                     std::vector<double>& zeros) {
    const double h = (b - a) / pieces;
    double x0 = a, f0 = Z(a);
    for (int k = 1; k <= pieces; ++k) {
        const double x1 = a + k * h;
        const double f1 = Z(x1);
        if ((f0 < 0) != (f1 < 0)) zeros.push_back(bisect_zero(Z, x0, x1, f0));
        x0 = x1;
        f0 = f1;
    }
}

}  // namespace

std::vector<double> find_zeros(double t_min, double t_max, double scan_step) {
    if (!(t_min >= 0) || !(t_max > t_min))
        throw DomainError("find_zeros: need 0 <= t_min < t_max");
    const HardyZ Z(t_max + 1.0);
    std::vector<double> zeros;
    const double start = std::max(t_min, 4.0);

    double x0 = start, f0 = Z(start);
    while (x0 < t_max) {
        const double x1 = std::min(x0 + scan_step, t_max);
        const double f1 = Z(x1);
        if ((f0 < 0) != (f1 < 0)) {
            zeros.push_back(bisect_zero(Z, x0, x1, f0));
        } else if (std::abs(f0) < 0.8 && std::abs(f1) < 0.8) {
            // same sign but small: a close pair may hide inside
            rescan_interval(Z, x0, x1, 32, zeros);
        }
        x0 = x1;
        f0 = f1;
    }
    return zeros;
}

std::vector<double> first_zeros(std::size_t n) {
    if (n == 0) throw DomainError("first_zeros: n must be positive");
    // invert the counting function N(T) ~ theta(T)/pi + 1 for a bracketing height
    double T = std::max(20.0, 10.0 + 2.0 * kPi * double(n));
    for (int iter = 0; iter < 64; ++iter) {
        const double count = riemann_siegel_theta(T) / kPi + 1.0;
        const double density = std::log(T / kTwoPi) / kTwoPi;
        const double delta = (double(n) - count) / std::max(density, 1e-3);
        T += delta;
        if (std::abs(delta) < 0.5) break;
    }
    T += 4.0;  // slack for the counting-function fluctuation
    std::vector<double> zeros = find_zeros(0.0, T);
    while (zeros.size() < n) {
        const double from = zeros.empty() ? 0.0 : zeros.back() + 1e-6;
        T += 10.0;
        auto more = find_zeros(from, T);
        zeros.insert(zeros.end(), more.begin(), more.end());
    }
    zeros.resize(n);
    return zeros;
}

void write_zero_table(const std::string& path, const std::vector<double>& zeros) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write zero table: " + path);
    out << "# critical-line zero ordinates, one per line\n";
    out << "# count " << zeros.size() << "\n";
    char buf[40];
    for (double z : zeros) {
        std::snprintf(buf, sizeof buf, "%.6f\n", z);
        out << buf;
    }
}

}  // namespace triplecorr
