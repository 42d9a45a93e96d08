#ifndef TRIPLECORR_ZEROFINDER_HPP
#define TRIPLECORR_ZEROFINDER_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace triplecorr {

// theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, asymptotic series
// (error < 1e-9 for t >= 10).
double riemann_siegel_theta(double t);

// Hardy's Z(t): Riemann-Siegel main sum with the first correction term above
// the crossover height, exp(i theta) zeta(1/2+it) via Euler-Maclaurin below.
// Zeros of Z are the ordinates of the critical-line zeros.
class HardyZ {
  public:
    explicit HardyZ(double t_max);
    double operator()(double t) const;
    double crossover() const { return crossover_; }

  private:
    double crossover_;
    std::vector<double> logn_;      // log n
    std::vector<double> rsqrtn_;    // n^{-1/2}
};

// All zero ordinates in (t_min, t_max), found by sign-change scanning with
// dip refinement and bisection. Accuracy ~1e-9 below the crossover, better
// than 2e-3 above (limited by the truncated Riemann-Siegel remainder).
std::vector<double> find_zeros(double t_min, double t_max, double scan_step = 0.006);

// The first n zeros (scans a bracketing range derived from the counting
// function and verifies exactly n were found below the returned height).
std::vector<double> first_zeros(std::size_t n);

// One ordinate per line, '#' header; load_zeros-compatible.
void write_zero_table(const std::string& path, const std::vector<double>& zeros);

}  // namespace triplecorr

#endif
