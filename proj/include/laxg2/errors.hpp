#pragma once

#include <stdexcept>
#include <string>

namespace laxg2 {

// Base for all library errors so callers can catch one type at the boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A 7x7 matrix fails the block-consistency conditions of the embedding.
struct NotInG2 : Error {
    explicit NotInG2(const std::string& block)
        : Error("not a valid embedded element: " + block), block(block) {}
    std::string block;
};

// Jet arithmetic produced an empty validity window.
struct EmptyWindow : Error {
    EmptyWindow() : Error("jet validity window is empty") {}
};

// A coefficient was requested outside a jet's validity window.
struct OrderOutsideWindow : Error {
    explicit OrderOutsideWindow(int order)
        : Error("order " + std::to_string(order) + " outside validity window"),
          order(order) {}
    int order;
};

// A jet coefficient violates one of the local shape conditions.
struct NotAdmissible : Error {
    NotAdmissible(const std::string& which, const std::string& detail)
        : Error("coefficient " + which + " not admissible: " + detail),
          which(which), detail(detail) {}
    std::string which;
    std::string detail;
};

// The local constraint system has lower rank than a generic datum gives.
struct DegenerateDatum : Error {
    explicit DegenerateDatum(const std::string& what) : Error(what) {}
};

// Grading data violate the divisor bookkeeping rules.
struct InvalidGrading : Error {
    explicit InvalidGrading(const std::string& what) : Error(what) {}
};

// Observed global dimension differs from the structural prediction; the
// configuration (locations or direction vectors) should be resampled.
struct DegenerateConfiguration : Error {
    explicit DegenerateConfiguration(const std::string& what) : Error(what) {}
};

// An element does not lie in the span of the probed degree window.
struct NotInWindow : Error {
    explicit NotInWindow(const std::string& what) : Error(what) {}
};

// No global 1-form exists within the given pole-degree budget.
struct NoSolution : Error {
    explicit NoSolution(const std::string& what) : Error(what) {}
};

// The certified-holomorphy check failed; for valid inputs this is a bug trap.
struct HolomorphyViolation : Error {
    explicit HolomorphyViolation(const std::string& what) : Error(what) {}
};

// Malformed or inconsistent run configuration.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Exact-arithmetic consistency failure (e.g. a sqrt2-part that must cancel
// did not). Always a bug, never a data problem.
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& what) : Error(what) {}
};

} // namespace laxg2
