#pragma once

#include <stdexcept>
#include <string>

namespace clm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something outside an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured size or time bound would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed (corrupt table, non-integral count, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double best_value, double best_bound)
      : Error(what), best_value_(best_value), best_bound_(best_bound) {}
  double best_value() const noexcept { return best_value_; }
  double best_bound() const noexcept { return best_bound_; }

 private:
  double best_value_;
  double best_bound_;
};

}  // namespace clm
