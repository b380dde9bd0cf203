#include "charvar/strata.hpp"

#include <stdexcept>

namespace charvar {

StratumSpec::StratumSpec(int d_, GenusParams p) : d(d_) {
  const int g = p.g;
  if (d < 1 || d > g - 1) {
    throw std::domain_error("StratumSpec: stratum index out of range");
  }
  mu = g - 1 + 2 * d;
  n = 2 * g - 2 - 2 * d;
  // Codimension law and top-degree law; both reduce to the definitions
  // above, kept as guards against drift.
  if (2 * mu != 2 * g + 4 * d - 2 || n < 0 || n % 2 != 0 ||
      2 * mu + 2 * n != 6 * g - 6) {
    throw std::logic_error("StratumSpec: invariant violated");
  }
}

IntPolynomial sym_product_poincare(int n, GenusParams p) {
  if (n < 0) {
    throw std::domain_error("sym_product_poincare: n must be nonnegative");
  }
  const int g = p.g;
  // x-series coefficients a_j of (1+xt)^{2g} / ((1-x)(1-xt^2)); clearing the
  // denominator gives a_j - (1+t^2) a_{j-1} + t^2 a_{j-2} = binom(2g,j) t^j.
  const IntPolynomial one_plus_t2 = IntPolynomial::from_coeffs({1, 0, 1});
  const IntPolynomial t2 = IntPolynomial::monomial(1, 2);
  IntPolynomial prev2;  // a_{-1} = 0
  IntPolynomial prev = IntPolynomial::constant(1);
  if (n == 0) return prev;
  for (int j = 1; j <= n; ++j) {
    IntPolynomial a = IntPolynomial::monomial(binomial(2 * g, j), j) +
                      one_plus_t2 * prev - t2 * prev2;
    prev2 = prev;
    prev = a;
  }
  return prev;
}

IntPolynomial prym_cover_poincare(int n, GenusParams p) {
  const int g = p.g;
  mpz_class sheets_minus_one = (mpz_class(1) << (2 * g)) - 1;
  mpz_class middle = sheets_minus_one * binomial(2 * g - 2, n);
  return sym_product_poincare(n, p) + IntPolynomial::monomial(middle, n);
}

IntPolynomial c_poly_strata(GenusParams p) {
  IntPolynomial total;
  for (int d = 1; d <= p.g - 1; ++d) {
    StratumSpec s(d, p);
    total = total + IntPolynomial::monomial(1, 2 * s.mu) *
                        prym_cover_poincare(s.n, p);
  }
  return total;
}

IntPolynomial m0_poincare_via_strata(GenusParams p) {
  // Minimum stratum retracts onto the flat moduli space, whose Betti
  // numbers agree with the compact-group representation variety.
  return psu_poly(p) + c_poly_strata(p);
}

IntPolynomial gamma2_invariant_strata(GenusParams p) {
  IntPolynomial total;
  for (int d = 1; d <= p.g - 1; ++d) {
    StratumSpec s(d, p);
    total = total + IntPolynomial::monomial(1, 2 * s.mu) *
                        sym_product_poincare(s.n, p);
  }
  return total;
}

}  // namespace charvar
