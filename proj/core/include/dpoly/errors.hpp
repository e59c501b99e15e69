#pragma once

#include <stdexcept>

// Error types shared across the library. Each names one violated
// precondition so callers can test for the exact failure mode.

namespace dpoly {

// series_invert: the constant coefficient a_0 has zero constant part.
struct ZeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// series_invert: a_0 depends on x or λ, so no polynomial inverse exists.
struct NonConstantLeadingTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// series_compose: the inner series has a nonzero constant coefficient.
struct NonzeroInnerConstant : std::domain_error {
    using std::domain_error::domain_error;
};

// series_exp / divide_by_t: the series must start at order 1 (a_0 == 0).
struct NonzeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// series_log: the constant coefficient must be exactly 1.
struct ConstantTermNotOne : std::domain_error {
    using std::domain_error::domain_error;
};

// Coefficient requested beyond the truncation order of a series.
struct OrderExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Brute-force enumeration refused: the search space is over the cap.
struct SizeLimit : std::length_error {
    using std::length_error::length_error;
};

// Rational-function evaluation hit a root of the denominator.
struct PoleAtEvaluationPoint : std::domain_error {
    using std::domain_error::domain_error;
};

// Identity label not in the registry.
struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Range bound below the smallest index at which a check is defined.
struct InvalidRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace dpoly
