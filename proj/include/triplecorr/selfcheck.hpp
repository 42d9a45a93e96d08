#ifndef TRIPLECORR_SELFCHECK_HPP
#define TRIPLECORR_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "triplecorr/config.hpp"

namespace triplecorr {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // worst deviation or first counterexample
};

// The unitary-group identity: thirteen-term bracket against the Gaudin
// determinant at seeded random well-separated triples.
CheckResult rmt_flagship_check(const std::vector<int>& Ns, int samples,
                               std::uint64_t seed, double tol = 1e-8);

// Fast oracle suite: derivative identities of the prime products, closed
// forms against quadrature, reflection/translation/symmetry invariants.
std::vector<CheckResult> run_selftest(const EngineConfig& config);

}  // namespace triplecorr

#endif
