#include "charvar/formulas.hpp"

namespace charvar {

namespace {

IntPolynomial tpow(int e) { return IntPolynomial::monomial(1, e); }

// 1 - t^e
IntPolynomial one_minus_tpow(int e) {
  return IntPolynomial::constant(1) - tpow(e);
}

mpz_class two_pow_2g_minus_one(int g) {
  return (mpz_class(1) << (2 * g)) - 1;
}

// Five-term assembly of the correction. The second term's t-exponent is a
// parameter: any value other than 2g+2 breaks the pole cancellation at
// t = 1 and t = +-i, so the corrupted variant reuses the rest verbatim and
// is guaranteed to trip the divisibility check instead of returning a
// plausible-looking wrong polynomial.
IntPolynomial c_assemble(int g, int term2_exp) {
  const IntPolynomial one = IntPolynomial::constant(1);
  const IntPolynomial up = IntPolynomial::from_coeffs({1, 1});
  const IntPolynomial um = IntPolynomial::from_coeffs({1, -1});
  const IntPolynomial one_minus_t2 = IntPolynomial::from_coeffs({1, 0, -1});
  const IntPolynomial one_plus_t2 = IntPolynomial::from_coeffs({1, 0, 1});
  const IntPolynomial up2g = poly_pow(up, 2 * g);
  const IntPolynomial um2g = poly_pow(um, 2 * g);

  RationalFunction term1 = -RationalFunction(tpow(4 * g - 4));

  RationalFunction term2(tpow(term2_exp) * up2g,
                         one_minus_t2 * one_minus_tpow(4));

  RationalFunction term3(um2g * tpow(4 * g - 4),
                         IntPolynomial::constant(4) * one_plus_t2);

  // 2g/(1+t) + 1/(t^2-1) - 1/2 + (3-2g), kept as exact rationals.
  RationalFunction bracket =
      RationalFunction(IntPolynomial::constant(2 * g), up) +
      RationalFunction(one, IntPolynomial::from_coeffs({-1, 0, 1})) +
      RationalFunction(IntPolynomial::constant(-1),
                       IntPolynomial::constant(2)) +
      RationalFunction(IntPolynomial::constant(3 - 2 * g));
  RationalFunction term4 =
      RationalFunction(up2g * tpow(4 * g - 4),
                       IntPolynomial::constant(2) * one_minus_t2) *
      bracket;

  IntPolynomial even_sum = poly_pow(up, 2 * g - 2) + poly_pow(um, 2 * g - 2) -
                           IntPolynomial::constant(2);
  RationalFunction term5(
      IntPolynomial::constant(two_pow_2g_minus_one(g)) *
          tpow(4 * g - 4) * even_sum,
      IntPolynomial::constant(2));

  return rat_to_poly(term1 + term2 + term3 + term4 + term5);
}

}  // namespace

RationalFunction ab_equivariant_series(GenusParams p) {
  const int g = p.g;
  IntPolynomial cube = IntPolynomial::from_coeffs({1, 0, 0, 1});
  IntPolynomial up = IntPolynomial::from_coeffs({1, 1});
  IntPolynomial num =
      poly_pow(cube, 2 * g) - tpow(2 * g + 2) * poly_pow(up, 2 * g);
  IntPolynomial den = one_minus_tpow(2) * one_minus_tpow(4);
  return RationalFunction(num, den);
}

IntPolynomial c_poly_closed(GenusParams p) { return c_assemble(p.g, 2 * p.g + 2); }

IntPolynomial psu_irr_poly(GenusParams p) {
  const int g = p.g;
  const IntPolynomial up = IntPolynomial::from_coeffs({1, 1});
  const IntPolynomial um = IntPolynomial::from_coeffs({1, -1});
  const IntPolynomial one_plus_t2 = IntPolynomial::from_coeffs({1, 0, 1});
  const IntPolynomial one_minus_t2 = IntPolynomial::from_coeffs({1, 0, -1});

  RationalFunction total = ab_equivariant_series(p);

  // Reducible classes carried by the equivariant series.
  IntPolynomial red_num =
      poly_pow(up, 2 * g) * one_plus_t2 + poly_pow(um, 2 * g) * one_minus_t2;
  total = total - RationalFunction(
                      red_num, IntPolynomial::constant(2) * one_minus_tpow(4));

  // Isotropy corrections indexed by k = 2..g. The multiplicity is the
  // dimension of the primitive part of the k-th exterior power, and the
  // two truncated geometric factors keep each summand polynomial.
  for (int k = 2; k <= g; ++k) {
    mpz_class mult = binomial(2 * g, k) - binomial(2 * g, k - 2);
    int e = eps2(k);
    IntPolynomial num = IntPolynomial::monomial(mult, k) *
                        one_minus_tpow(2 * k + 2 * e) *
                        one_minus_tpow(2 * g - 2 * k + 2 + e);
    total = total + RationalFunction(
                        num, one_minus_tpow(1) * one_minus_tpow(4));
  }

  return rat_to_poly(total);
}

IntPolynomial psu_poly(GenusParams p) {
  const int g = p.g;
  const IntPolynomial up = IntPolynomial::from_coeffs({1, 1});
  const IntPolynomial um = IntPolynomial::from_coeffs({1, -1});

  RationalFunction total = RationalFunction(psu_irr_poly(p));
  IntPolynomial half_num =
      tpow(1) * (poly_pow(up, 2 * g) + poly_pow(um, 2 * g));
  total = total - RationalFunction(half_num, IntPolynomial::constant(2));
  total = total + RationalFunction(one_minus_tpow(2 * g + 2),
                                   one_minus_tpow(1));
  return rat_to_poly(total);
}

IntPolynomial x0_poly(GenusParams p) { return psu_poly(p) + c_poly_closed(p); }

IntPolynomial x0_irr_poly(GenusParams p) {
  return psu_irr_poly(p) + c_poly_closed(p);
}

RationalFunction sl2c_equivariant_series(GenusParams p) {
  return ab_equivariant_series(p) + RationalFunction(c_poly_closed(p));
}

namespace detail {

IntPolynomial c_poly_closed_corrupted(GenusParams p) {
  return c_assemble(p.g, 2 * p.g + 1);
}

}  // namespace detail

}  // namespace charvar
