#pragma once

#include <stdexcept>
#include <string>

namespace dirackit {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// process exit codes: ConfigError/UsageError/ShapeError -> 2,
// SingularPointError -> 3, ResourceError -> 4.

// Invalid construction data: unknown family, bad rank, a root set that is not
// reflection-closed, a compact subset that is not a symmetric-space grading.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation invoked outside its contract: wrong pair family, inconsistent
// case tag, non-dominant weight where dominance is required.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension or rank mismatch between otherwise valid values.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hard size cap was exceeded (Weyl group enumeration, character support).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric character evaluation at a point where the denominator vanishes.
struct SingularPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dirackit
