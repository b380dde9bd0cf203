#include "charvar/poly.hpp"

#include <sstream>
#include <utility>

namespace charvar {

namespace {
const mpz_class kZero = 0;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::constant(long c) { return constant(mpz_class(c)); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<mpz_class> v(static_cast<size_t>(degree) + 1, kZero);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_coeffs(std::initializer_list<long> ascending) {
  std::vector<mpz_class> v;
  v.reserve(ascending.size());
  for (long c : ascending) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

const mpz_class& IntPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(d)];
}

const mpz_class& IntPolynomial::leading_coeff() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << "-";
    first = false;
    mpz_class a = abs(c);
    if (a != 1 || d == 0) out << a.get_str();
    if (d > 0) {
      if (a != 1) out << "*";
      out << "t";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<mpz_class> out(std::max(ca.size(), cb.size()), kZero);
  for (size_t i = 0; i < ca.size(); ++i) out[i] = ca[i];
  for (size_t i = 0; i < cb.size(); ++i) out[i] += cb[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_add(a, poly_neg(b));
}

IntPolynomial poly_neg(const IntPolynomial& a) {
  std::vector<mpz_class> out = a.coeffs();
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<mpz_class> out(ca.size() + cb.size() - 1, kZero);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j) {
      out[i + j] += ca[i] * cb[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& base, unsigned n) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial sq = base;
  while (n > 0) {
    if (n & 1u) result = poly_mul(result, sq);
    n >>= 1u;
    if (n > 0) sq = poly_mul(sq, sq);
  }
  return result;
}

IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("poly_divexact: zero divisor");
  if (num.is_zero()) return IntPolynomial();
  int dn = num.degree();
  int dd = den.degree();
  if (dn < dd) {
    throw NotDivisible(NotDivisible::Kind::remainder,
                       "poly_divexact: numerator degree below divisor degree");
  }

  std::vector<mpq_class> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<mpq_class> quot(static_cast<size_t>(dn - dd) + 1, 0);
  const mpz_class& lead = den.coeff(dd);
  for (int i = dn - dd; i >= 0; --i) {
    mpq_class q = rem[static_cast<size_t>(i + dd)] / lead;
    quot[static_cast<size_t>(i)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<size_t>(i + j)] -= q * den.coeff(j);
    }
  }
  for (int j = 0; j < dd; ++j) {
    if (rem[static_cast<size_t>(j)] != 0) {
      throw NotDivisible(NotDivisible::Kind::remainder,
                         "poly_divexact: nonzero remainder at degree " +
                             std::to_string(j));
    }
  }
  std::vector<mpz_class> out;
  out.reserve(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    mpq_class q = quot[i];
    q.canonicalize();
    if (q.get_den() != 1) {
      throw NotDivisible(NotDivisible::Kind::non_integral_quotient,
                         "poly_divexact: non-integral quotient at degree " +
                             std::to_string(i));
    }
    out.push_back(q.get_num());
  }
  return IntPolynomial(std::move(out));
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), i + 1);
  }
  return b;
}

}  // namespace charvar
