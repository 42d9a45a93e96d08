#include "triplecorr/zeta.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace triplecorr {

namespace {

constexpr double kPoleRadius = 1e-12;
constexpr double kImMax = 1.0e4 + 1.0;

// B_{2k}/(2k)! for k = 1..30 via B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k)/(2pi)^{2k}.
const std::vector<double>& bernoulli_coeffs() {
    static std::once_flag flag;
    static std::vector<double> coef;
    std::call_once(flag, [] {
        coef.assign(31, 0.0);
        double twopi_pow = 1.0;
        for (int k = 1; k <= 30; ++k) {
            double z2k;
            if (k == 1) {
                z2k = kPi * kPi / 6.0;
            } else if (k == 2) {
                z2k = kPi * kPi * kPi * kPi / 90.0;
            } else {
                z2k = 0.0;
                for (int n = 4000; n >= 1; --n) z2k += std::pow(double(n), -2.0 * k);
            }
            twopi_pow = std::pow(kTwoPi, 2.0 * k);
            coef[k] = ((k % 2 == 1) ? 2.0 : -2.0) * z2k / twopi_pow;
        }
    });
    return coef;
}

// log n for n = 1..kLogTable, shared read-only after first use.
constexpr std::size_t kLogTable = 16384;
const std::vector<double>& log_table() {
    static std::once_flag flag;
    static std::vector<double> logs;
    std::call_once(flag, [] {
        logs.resize(kLogTable + 1);
        for (std::size_t n = 1; n <= kLogTable; ++n) logs[n] = std::log(double(n));
    });
    return logs;
}

void check_domain(const Cx& s) {
    if (std::abs(s - 1.0) < kPoleRadius) throw PoleAtOne("zeta: pole at s = 1");
    if (s.real() < -0.5 || std::abs(s.imag()) > kImMax)
        throw DomainError("zeta: argument outside Re s >= -0.5, |Im s| <= 1e4");
}

// Euler-Maclaurin core. Returns d^order/ds^order zeta(s).
Cx zeta_em(const Cx& s, int order, const EulerMaclaurinParams& params) {
    params.validate();
    check_domain(s);

    const int N = params.cutoff_terms + int(std::ceil(std::abs(s.imag())));
    const auto& logs = log_table();

    // direct sum over n < N of log^order(n) (-1)^order n^{-s}
    KahanCx acc;
    for (int n = 1; n < N; ++n) {
        const double ln = (std::size_t(n) <= kLogTable) ? logs[n] : std::log(double(n));
        const Cx t = std::exp(-s * ln);
        switch (order) {
            case 0: acc.add(t); break;
            case 1: acc.add(-ln * t); break;
            default: acc.add(ln * ln * t); break;
        }
    }
    Cx sum = acc.value();

    const double lnN = (std::size_t(N) <= kLogTable) ? logs[N] : std::log(double(N));
    const Cx Nms = std::exp(-s * lnN);  // N^{-s}
    const Cx sm1 = s - 1.0;

    // integral term N^{1-s}/(s-1) and its s-derivatives
    const Cx NI = double(N) * Nms;
    switch (order) {
        case 0:
            sum += NI / sm1 + 0.5 * Nms;
            break;
        case 1:
            sum += -lnN * NI / sm1 - NI / (sm1 * sm1) - 0.5 * lnN * Nms;
            break;
        default:
            sum += lnN * lnN * NI / sm1 + 2.0 * lnN * NI / (sm1 * sm1) +
                   2.0 * NI / (sm1 * sm1 * sm1) + 0.5 * lnN * lnN * Nms;
            break;
    }

    // Bernoulli corrections: coef_k * (s)_{2k-1} * N^{-s-2k+1}, differentiated
    // in s via h = sum 1/(s+j), h' = -sum 1/(s+j)^2 over the rising factorial.
    const auto& coef = bernoulli_coeffs();
    Cx poch = s;           // (s)_1
    Cx h = 1.0 / s;        // d log poch / ds
    Cx hp = -1.0 / (s * s);
    double Npow = 1.0 / double(N);  // N^{-(2k-1)} running
    for (int k = 1; k <= params.bernoulli_depth; ++k) {
        if (k > 1) {
            const Cx f1 = s + double(2 * k - 3);
            const Cx f2 = s + double(2 * k - 2);
            poch *= f1 * f2;
            h += 1.0 / f1 + 1.0 / f2;
            hp += -1.0 / (f1 * f1) - 1.0 / (f2 * f2);
            Npow /= double(N) * double(N);
        }
        const Cx base = Nms * Npow;  // N^{-s-2k+1}
        Cx term;
        switch (order) {
            case 0: term = poch * base; break;
            case 1: term = poch * (h - lnN) * base; break;
            default: term = poch * ((h - lnN) * (h - lnN) + hp) * base; break;
        }
        sum += coef[k] * term;
    }
    return sum;
}

}  // namespace

const std::array<double, 5>& stieltjes_constants() {
    static std::once_flag flag;
    static std::array<double, 5> g;
    std::call_once(flag, [] {
        // gamma_n = sum_{k<M} f(k) - log^{n+1}M/(n+1) + f(M)/2
        //          - sum_j B_{2j}/(2j)! f^{(2j-1)}(M),   f(x) = log^n x / x,
        // with f^{(m)}(x) = x^{-(m+1)} P_m(log x), P_0 = u^n,
        // P_{m+1} = P_m' - (m+1) P_m.
        constexpr int M = 200000;
        constexpr int J = 8;
        const auto& coef = bernoulli_coeffs();
        for (int n = 0; n <= 4; ++n) {
            long double sum = 0.0L;
            for (int k = 1; k < M; ++k) {
                const long double l = std::log((long double)k);
                long double p = 1.0L;
                for (int j = 0; j < n; ++j) p *= l;
                sum += p / k;
            }
            const long double lM = std::log((long double)M);
            long double lMp = 1.0L;
            for (int j = 0; j <= n; ++j) lMp *= lM;
            sum -= lMp / (n + 1);
            lMp /= lM;  // log^n M
            sum += lMp / (2.0L * M);

            std::vector<long double> P(n + 1, 0.0L);
            P[n] = 1.0L;
            int m = 0;
            for (int j = 1; j <= J; ++j) {
                // advance P to P_{2j-1}
                while (m < 2 * j - 1) {
                    std::vector<long double> Q(n + 1, 0.0L);
                    for (int i = 0; i <= n; ++i) {
                        if (i + 1 <= n) Q[i] += (i + 1) * P[i + 1];
                        Q[i] -= (m + 1) * P[i];
                    }
                    P = Q;
                    ++m;
                }
                long double val = 0.0L, lp = 1.0L;
                for (int i = 0; i <= n; ++i) {
                    val += P[i] * lp;
                    lp *= lM;
                }
                long double xpow = std::pow((long double)M, (long double)(m + 1));
                sum -= (long double)coef[j] * val / xpow;
            }
            g[std::size_t(n)] = double(sum);
        }
    });
    return g;
}

namespace detail {

Cx zeta_laurent(const Cx& w) {
    const auto& g = stieltjes_constants();
    // 1/w + g0 - g1 w + g2 w^2/2 - g3 w^3/6 + g4 w^4/24
    return 1.0 / w + g[0] +
           w * (-g[1] + w * (g[2] / 2.0 + w * (-g[3] / 6.0 + w * (g[4] / 24.0))));
}

Cx zeta_deriv_laurent(const Cx& w) {
    const auto& g = stieltjes_constants();
    return -1.0 / (w * w) - g[1] +
           w * (g[2] + w * (-g[3] / 2.0 + w * (g[4] / 6.0)));
}

Cx zeta_deriv2_laurent(const Cx& w) {
    const auto& g = stieltjes_constants();
    return 2.0 / (w * w * w) + g[2] + w * (-g[3] + w * (g[4] / 2.0));
}

}  // namespace detail

Cx zeta(const Cx& s, const EulerMaclaurinParams& params) {
    return ensure_finite(zeta_em(s, 0, params), "zeta");
}

Cx zeta_derivative(const Cx& s, int order, const EulerMaclaurinParams& params) {
    if (order < 0 || order > 2) throw DomainError("zeta_derivative: order must be 0, 1 or 2");
    return ensure_finite(zeta_em(s, order, params), "zeta_derivative");
}

Cx zeta_log_deriv(const Cx& s, const EulerMaclaurinParams& params, double switch_radius) {
    const Cx w = s - 1.0;
    if (std::abs(w) < kPoleRadius) throw PoleAtOne("zeta_log_deriv: pole at s = 1");
    if (std::abs(w) < switch_radius) {
        return ensure_finite(detail::zeta_deriv_laurent(w) / detail::zeta_laurent(w),
                             "zeta_log_deriv");
    }
    return ensure_finite(zeta_em(s, 1, params) / zeta_em(s, 0, params), "zeta_log_deriv");
}

Cx zeta_log_deriv_prime(const Cx& s, const EulerMaclaurinParams& params,
                        double switch_radius) {
    const Cx w = s - 1.0;
    if (std::abs(w) < kPoleRadius) throw PoleAtOne("zeta_log_deriv_prime: pole at s = 1");
    Cx z, zp, zpp;
    if (std::abs(w) < switch_radius) {
        z = detail::zeta_laurent(w);
        zp = detail::zeta_deriv_laurent(w);
        zpp = detail::zeta_deriv2_laurent(w);
    } else {
        z = zeta_em(s, 0, params);
        zp = zeta_em(s, 1, params);
        zpp = zeta_em(s, 2, params);
    }
    const Cx ld = zp / z;
    return ensure_finite(zpp / z - ld * ld, "zeta_log_deriv_prime");
}

double chi_log_deriv_asymptotic(double t) {
    if (t <= 0) throw DomainError("chi_log_deriv_asymptotic: t must be positive");
    return -std::log(t / kTwoPi);
}

}  // namespace triplecorr
