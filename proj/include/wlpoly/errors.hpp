#pragma once

#include <stdexcept>

namespace wlpoly {

// Input-side errors: the caller handed us something invalid.
struct MalformedPartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyPartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OracleBoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InsufficientCoefficients : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadNormalization : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthBoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroDenominator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A polynomial family was evaluated at a parameter where a leading factor
// of its generating recurrence vanishes.
struct SingularParameter : std::domain_error {
    using std::domain_error::domain_error;
};

// Internal consistency failures.  These signal implementation bugs, not bad
// input: every division guarded by them is exact by construction.
struct InexactDivision : std::logic_error {
    using std::logic_error::logic_error;
};
struct NonMonicResult : std::logic_error {
    using std::logic_error::logic_error;
};
struct DegenerateLeadingCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wlpoly
