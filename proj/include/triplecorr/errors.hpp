#ifndef TRIPLECORR_ERRORS_HPP
#define TRIPLECORR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triplecorr {

// Argument outside the region where an operation is defined/convergent.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested at (or too close to) the pole of zeta at s = 1.
struct PoleAtOne : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z(x)-family evaluation at x = 2*pi*i*k.
struct PoleAtLatticePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Moment/bracket arguments on a singular line.
struct SingularInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two grids that must share axes/masks/normalization do not.
struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; line is 1-based, 0 when not applicable.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line_number = 0)
        : std::runtime_error(line_number
                                 ? what + " (line " + std::to_string(line_number) + ")"
                                 : what),
          line(line_number) {}
    std::size_t line;
};

struct EmptyFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds the configured memory budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A local factor of a prime product is too close to zero to log.
struct FactorNearZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid engine configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// NaN/Inf about to escape a public operation.
struct NonFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace triplecorr

#endif
