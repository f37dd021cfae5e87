#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

// Caller handed us inputs that violate a documented precondition.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact-geometry routine met a degenerate point set (affine dependence,
// coincident points, a zero coefficient in a Radon kernel).
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the caller's subset budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A randomized construction ran out of retries.
struct ConstructiveFailureError : std::runtime_error {
    explicit ConstructiveFailureError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rsc
