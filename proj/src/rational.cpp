#include "charvar/rational.hpp"

#include <string>
#include <utility>

namespace charvar {

RationalFunction::RationalFunction(const IntPolynomial& p)
    : num_(p), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::invalid_argument("RationalFunction: zero denominator");
  }
  if (den_.leading_coeff() < 0) {
    num_ = poly_neg(num_);
    den_ = poly_neg(den_);
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.den() + b.num() * a.den(),
                          a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.den() - b.num() * a.den(),
                          a.den() * b.den());
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(poly_neg(a.num()), a.den());
}

bool rat_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

IntPolynomial rat_to_poly(const RationalFunction& f) {
  if (f.num().is_zero()) return IntPolynomial();
  return poly_divexact(f.num(), f.den());
}

GradedDims series_expand(const RationalFunction& f, int order) {
  if (order < 0) throw std::invalid_argument("series_expand: negative order");
  const IntPolynomial& num = f.num();
  const IntPolynomial& den = f.den();
  const mpz_class& d0 = den.coeff(0);
  if (d0 == 0) {
    throw NotASeries("series_expand: denominator constant term is zero");
  }

  GradedDims out;
  out.truncation_order = order;
  out.dims.reserve(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    mpq_class acc(num.coeff(k));
    for (int j = 1; j <= k && j <= den.degree(); ++j) {
      if (den.coeff(j) != 0) {
        acc -= mpq_class(den.coeff(j)) * out.dims[static_cast<size_t>(k - j)];
      }
    }
    acc /= d0;
    acc.canonicalize();
    if (acc.get_den() != 1) {
      throw IntegralityViolation(
          "series_expand: non-integral coefficient at degree " +
          std::to_string(k));
    }
    out.dims.push_back(acc.get_num());
  }

  out.exact = false;
  if (num.is_zero()) {
    out.exact = true;
  } else {
    try {
      IntPolynomial q = poly_divexact(num, den);
      out.exact = q.degree() <= order;
    } catch (const NotDivisible&) {
      out.exact = false;
    }
  }
  return out;
}

}  // namespace charvar
