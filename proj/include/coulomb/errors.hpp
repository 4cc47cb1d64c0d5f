#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

// Base for everything thrown on purpose by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad syntax, wrong rank, disallowed variable, bad config.
// The CLI maps this to exit code 2.
struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

// A mathematically meaningful failure: inexact division where exactness is
// required, singular evaluation point, violated precondition of a theorem-
// level construction. The CLI maps this to exit code 1.
struct MathError : Error {
  explicit MathError(const std::string& what) : Error(what) {}
};

}  // namespace coulomb
