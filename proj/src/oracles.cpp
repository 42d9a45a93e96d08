#include "triplecorr/oracles.hpp"

#include <cmath>

namespace triplecorr {

namespace {

Cx simpson_rec(const std::function<Cx(double)>& f, double a, double b, const Cx& fa,
               const Cx& fm, const Cx& fb, const Cx& whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const Cx flm = f(lm), frm = f(rm);
    const Cx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Cx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Cx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

Cx adaptive_simpson(const std::function<Cx(double)>& f, double a, double b,
                    double abs_tol, int max_depth) {
    const Cx fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const Cx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

Cx kernel_quadrature(const Cx& z, int k, double T) {
    const double uhi = std::log(T / kTwoPi);
    const double ulo = uhi - 40.0;  // e^{-40} tail is below double precision
    auto integrand = [&](double u) -> Cx {
        double uk = 1.0;
        for (int j = 0; j < k; ++j) uk *= u;
        return uk * std::exp((1.0 - z) * u);
    };
    // scale the tolerance by a coarse magnitude estimate of the integrand
    double scale = 0.0;
    for (int j = 0; j <= 8; ++j)
        scale = std::max(scale, std::abs(integrand(ulo + (uhi - ulo) * j / 8.0)));
    const double tol = 1e-14 * scale * (uhi - ulo) + 1e-280;
    return kTwoPi * adaptive_simpson(integrand, ulo, uhi, tol, 36);
}

Cx contour_residue(const std::function<Cx(Cx)>& f, const Cx& c, double radius,
                   int points) {
    KahanCx sum;
    for (int k = 0; k < points; ++k) {
        const double phi = kTwoPi * k / points;
        const Cx e(std::cos(phi), std::sin(phi));
        sum.add(f(c + radius * e) * radius * e);
    }
    return sum.value() / double(points);
}

Cx central_diff(const std::function<Cx(Cx)>& f, const Cx& x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace triplecorr
