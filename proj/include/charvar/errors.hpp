#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

// Exact division failed. kind() distinguishes a nonzero remainder from a
// quotient that exists over the rationals but is not integral.
class NotDivisible : public std::runtime_error {
 public:
  enum class Kind { remainder, non_integral_quotient };

  NotDivisible(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// The rational function has no Taylor expansion at t = 0 (denominator
// constant term is zero).
class NotASeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Taylor coefficient or assembled scalar failed to be an integer.
class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decomposition table row would carry a negative invariant part.
class InconsistentTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace charvar
