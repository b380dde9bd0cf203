#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

// Dense univariate polynomial in t with arbitrary precision integer
// coefficients. Canonical form: trailing zero coefficients are trimmed, so
// the highest stored coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  // Degree reported for the zero polynomial; never a valid coefficient index.
  static constexpr int zero_degree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial constant(long c);
  static IntPolynomial monomial(const mpz_class& c, int degree);
  // Builds a0 + a1 t + a2 t^2 + ... from small literals.
  static IntPolynomial from_coeffs(std::initializer_list<long> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of t^d; zero outside the stored range.
  const mpz_class& coeff(int d) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading_coeff() const;

  mpz_class eval(const mpz_class& x) const;

  bool operator==(const IntPolynomial& other) const = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_neg(const IntPolynomial& a);
IntPolynomial poly_pow(const IntPolynomial& base, unsigned n);

// Exact quotient q with q * den = num over the integers. Throws NotDivisible
// when the division leaves a remainder or the quotient is non-integral; the
// two cases are distinguished in the error payload. Division runs over the
// rationals with a final integrality check.
IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den);

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_add(a, b);
}
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_sub(a, b);
}
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_mul(a, b);
}
inline IntPolynomial operator-(const IntPolynomial& a) { return poly_neg(a); }

// Exact binomial coefficient by the multiplicative recurrence; no floating
// point anywhere in the engine.
mpz_class binomial(unsigned n, unsigned k);

}  // namespace charvar
