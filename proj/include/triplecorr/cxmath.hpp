#ifndef TRIPLECORR_CXMATH_HPP
#define TRIPLECORR_CXMATH_HPP

#include <cmath>
#include <complex>
#include <string>

#include "triplecorr/errors.hpp"

namespace triplecorr {

using Cx = std::complex<double>;

// exp(z) - 1 without cancellation for small |z|.
// Re: expm1(x)cos(y) - 2 sin^2(y/2),  Im: exp(x) sin(y).
inline Cx cexpm1(const Cx& z) {
    const double x = z.real(), y = z.imag();
    const double sh = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * sh * sh, std::exp(x) * std::sin(y)};
}

// log(1+z) without cancellation for small |z|; uses log(1+z) = 2 atanh(z/(2+z)).
inline Cx clog1p(const Cx& z) {
    if (std::abs(z) < 0.5) {
        return 2.0 * std::atanh(z / (2.0 + z));
    }
    return std::log(1.0 + z);
}

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Cx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename T>
inline T ensure_finite(const T& v, const char* what) {
    if (!is_finite(v)) throw NonFinite(std::string(what) + ": non-finite result");
    return v;
}

// Compensated (Kahan) accumulator.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

struct KahanCx {
    KahanSum re, im;
    void add(const Cx& z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Cx value() const { return {re.value(), im.value()}; }
};

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

}  // namespace triplecorr

#endif
