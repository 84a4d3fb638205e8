#pragma once

#include <stdexcept>
#include <string>

namespace absarith {

// Precondition or mathematical-domain violation (exit code 1 in the CLI).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input structurally valid but too large for the requested representation.
struct SizeError : DomainError {
  explicit SizeError(const std::string& what) : DomainError(what) {}
};

// A configurable effort budget ran out (exit code 3 in the CLI); the message
// names the unfinished part so callers never mistake a partial answer for a
// complete one.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An exactness witness failed: a value that the underlying theorem promises
// to be integral (or divisible) is not.  Signals bad input data, never a
// rounding to hide.
struct IntegralityError : std::runtime_error {
  explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace absarith
