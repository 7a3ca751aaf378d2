#pragma once

#include <stdexcept>
#include <string>

namespace specsketch {

/// Rejected operand: bad dimensions, non-finite values, broken preconditions.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver ran out of its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested computation exceeds a configured resource cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specsketch
