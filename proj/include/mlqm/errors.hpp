#pragma once

#include <stdexcept>
#include <string>

namespace mlqm {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Result would exceed the double range.
struct OverflowError : std::range_error {
    explicit OverflowError(const std::string& what) : std::range_error(what) {}
};

/// Iterative scheme exhausted its budget before reaching tolerance.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Root bracket does not enclose a sign change.
struct InvalidBracket : std::invalid_argument {
    explicit InvalidBracket(const std::string& what) : std::invalid_argument(what) {}
};

/// Adaptive ODE step shrank below representable resolution.
struct StepUnderflow : std::runtime_error {
    explicit StepUnderflow(const std::string& what) : std::runtime_error(what) {}
};

/// Dense eigensolver failed to deflate.
struct EigenFailure : std::runtime_error {
    explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Doubling the discretization grid moved the answer too much.
struct GridTooCoarse : std::runtime_error {
    explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

/// Requested spectral branch does not exist for these parameters.
struct NoBoundState : std::runtime_error {
    explicit NoBoundState(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mlqm
