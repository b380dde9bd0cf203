#pragma once

#include <gmpxx.h>

#include <vector>

#include "charvar/poly.hpp"

namespace charvar {

// Truncated list of per-degree graded dimensions. dims has exactly
// truncation_order + 1 entries (degrees 0 .. truncation_order). exact is true
// when the underlying object is a polynomial of degree <= truncation_order,
// so the listed entries are the whole story.
struct GradedDims {
  std::vector<mpz_class> dims;
  int truncation_order = 0;
  bool exact = false;

  bool operator==(const GradedDims& other) const = default;
};

// Exact quotient of two integer polynomials. Never auto-expanded and never
// reduced to lowest terms; equality is decided by cross-multiplication.
// Invariants: denominator is nonzero and has a positive leading coefficient
// (sign is normalized into the numerator on construction).
class RationalFunction {
 public:
  // Implicit lift of a polynomial to the function with denominator 1, so
  // formula assembly reads like the formulas themselves.
  RationalFunction(const IntPolynomial& p);  // NOLINT(runtime/explicit)
  RationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);

// True iff a.num * b.den = b.num * a.den as integer polynomials.
bool rat_equal(const RationalFunction& a, const RationalFunction& b);

// Certifies that f is an integer polynomial and returns it. Same error
// contract as poly_divexact.
IntPolynomial rat_to_poly(const RationalFunction& f);

// First order+1 Taylor coefficients of f at t = 0, exact integers. Throws
// NotASeries when the denominator constant term vanishes and
// IntegralityViolation when any coefficient fails to be an integer. The
// exact flag is set when f is a polynomial of degree <= order.
GradedDims series_expand(const RationalFunction& f, int order);

}  // namespace charvar
