#ifndef TRIPLECORR_CONFIG_HPP
#define TRIPLECORR_CONFIG_HPP

#include <cstdint>

#include "triplecorr/errors.hpp"

namespace triplecorr {

// Shared knobs for the evaluation engine. Defaults match the desk-scale runs
// (T near the height of the 100000th zero, 30x30 window).
struct EngineConfig {
    double T = 75000.0;
    std::uint64_t prime_limit = 100000;
    int em_depth = 12;           // Bernoulli correction terms in Euler-Maclaurin
    double mask_band = 0.5;      // half-width of the excluded band around singular lines
    double window = 30.0;
    double step = 0.25;
    double bin = 0.2;            // histogram bin width, unscaled ordinate units
    double switch_radius = 1e-3; // Laurent/direct branch switch for zeta'/zeta near 1

    void validate() const {
        if (!(T > 0)) throw ConfigError("T must be positive");
        if (prime_limit < 1000 || prime_limit > 100000000)
            throw ConfigError("prime_limit must be in [1e3, 1e8]");
        if (em_depth < 2 || em_depth > 30)
            throw ConfigError("em-depth must be in [2, 30]");
        if (!(mask_band > 0)) throw ConfigError("mask-band must be positive");
        if (!(window > 0)) throw ConfigError("window must be positive");
        if (!(step > 0) || step > window)
            throw ConfigError("step must be positive and not exceed window");
        if (!(bin > 0) || bin > window)
            throw ConfigError("bin must be positive and not exceed window");
        if (!(switch_radius > 0) || switch_radius > 0.1)
            throw ConfigError("switch-radius must be in (0, 0.1]");
    }
};

// Thread count for grid/histogram evaluation: TRIPLECORR_THREADS, else
// hardware concurrency. Always >= 1.
int configured_threads();

}  // namespace triplecorr

#endif
