#pragma once

#include <stdexcept>
#include <string>

namespace hc {

/// Unknown model name passed to the built-in catalog.
struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Model parameters outside their admissible ranges or violating a simplex
/// constraint, or a matrix whose support does not match its graph.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Denominator of a boundary-law ratio vanished at the evaluation point.
struct SingularEvaluation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An intermediate expression left its real domain (negative radicand).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested scan range cannot contain all fixed points.
struct ScanRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation invoked outside the assumptions it was derived under.
struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Interval-contraction machinery invoked on a matrix it does not cover.
struct InapplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hc
