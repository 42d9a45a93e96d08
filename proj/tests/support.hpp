#ifndef TRIPLECORR_TESTS_SUPPORT_HPP
#define TRIPLECORR_TESTS_SUPPORT_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "triplecorr/zerofinder.hpp"
#include "triplecorr/zeros.hpp"

namespace testsupport {

// published ordinates of the first ten critical-line zeros
inline constexpr std::array<double, 10> kFirstZeros = {
    14.134725141734694, 21.022039638771555, 25.010857580145689,
    30.424876125859513, 32.935061587739190, 37.586178158825671,
    40.918719012147495, 43.327073280914999, 48.005150881167160,
    49.773832477672302,
};

// published height of the 100000th zero
inline constexpr double kZero100000 = 74920.827498994;

// Generate (once) and load a zero table with `count` ordinates; cached next
// to the test binary so repeated runs and other binaries reuse it.
inline triplecorr::ZeroDataset cached_zeros(std::size_t count) {
    namespace fs = std::filesystem;
    const std::string path = "zeros_cache_" + std::to_string(count) + ".txt";
    if (!fs::exists(path)) {
        const auto zeros = triplecorr::first_zeros(count);
        const std::string tmp = path + ".tmp";
        triplecorr::write_zero_table(tmp, zeros);
        fs::rename(tmp, path);
    }
    return triplecorr::load_zeros(path);
}

}  // namespace testsupport

#endif
