#include "charvar/actions.hpp"

#include <stdexcept>

namespace charvar {

namespace {

mpz_class nontrivial_characters(int g) { return (mpz_class(1) << (2 * g)) - 1; }

// Sum over q in the index set of (2^{2g}-1) binom(2g-2,q) t^{6g-6-q}: the
// twisted part of the splitting, located at the degrees it occupies in the
// decomposition tables.
IntPolynomial prym_locus_poly(const std::vector<int>& qs, GenusParams p) {
  const int g = p.g;
  IntPolynomial out;
  for (int q : qs) {
    mpz_class c = nontrivial_characters(g) * prym_dim(q, p);
    out = out + IntPolynomial::monomial(c, 6 * g - 6 - q);
  }
  return out;
}

}  // namespace

mpz_class prym_dim(int q, GenusParams p) {
  if (q < 0) throw std::domain_error("prym_dim: q must be nonnegative");
  return binomial(static_cast<unsigned>(2 * p.g - 2),
                  static_cast<unsigned>(q));
}

std::vector<int> even_index_set(GenusParams p) {
  std::vector<int> qs;
  for (int j = 1; j <= p.g - 2; ++j) qs.push_back(2 * j);
  return qs;
}

std::vector<int> odd_index_set(GenusParams p) {
  std::vector<int> qs;
  for (int j = 1; j <= p.g - 1; ++j) qs.push_back(2 * j - 1);
  return qs;
}

IntPolynomial even_twisted_poly(GenusParams p) {
  return prym_locus_poly(even_index_set(p), p);
}

IntPolynomial kirwan_defect(GenusParams p) {
  // Kernel degrees sit one above the splitting degrees 6g-6-q.
  return IntPolynomial::monomial(1, 1) * even_twisted_poly(p);
}

std::vector<TorelliRow> torelli_table_equivariant_even(GenusParams p,
                                                       int truncation) {
  if (truncation < 0) {
    throw std::domain_error("torelli_table_equivariant_even: bad truncation");
  }
  GradedDims totals = series_expand(sl2c_equivariant_series(p), truncation);
  IntPolynomial prym = prym_locus_poly(even_index_set(p), p);

  std::vector<TorelliRow> rows;
  rows.reserve(static_cast<size_t>(truncation) + 1);
  for (int deg = 0; deg <= truncation; ++deg) {
    TorelliRow row;
    row.degree = deg;
    row.total = totals.dims[static_cast<size_t>(deg)];
    row.prym = prym.coeff(deg);
    row.invariant = row.total - row.prym;
    if (row.invariant < 0) {
      throw InconsistentTable(
          "torelli_table_equivariant_even: negative invariant part at degree " +
          std::to_string(deg));
    }
    row.torelli_trivial = (row.prym == 0);
    row.prym_torelli_trivial = true;
    row.total_known = true;
    rows.push_back(row);
  }
  return rows;
}

std::vector<TorelliRow> torelli_table_odd(GenusParams p) {
  IntPolynomial prym = prym_locus_poly(odd_index_set(p), p);
  std::vector<TorelliRow> rows;
  const int top = 6 * p.g - 6;
  rows.reserve(static_cast<size_t>(top) + 1);
  for (int deg = 0; deg <= top; ++deg) {
    TorelliRow row;
    row.degree = deg;
    row.prym = prym.coeff(deg);
    row.total_known = false;
    row.torelli_trivial = (row.prym == 0);
    row.prym_torelli_trivial = true;
    rows.push_back(row);
  }
  return rows;
}

RationalFunction tensor_nonfixed_equivariant(GenusParams p) {
  RationalFunction invariant_part =
      sl2c_equivariant_series(p) - RationalFunction(even_twisted_poly(p));
  RationalFunction jacobian_and_bu1(
      poly_pow(IntPolynomial::from_coeffs({1, 1}), 2 * p.g),
      IntPolynomial::from_coeffs({1, 0, -1}));
  return invariant_part * jacobian_and_bu1;
}

RationalFunction req_equivariant_series(GenusParams p) {
  RationalFunction jacobian_and_bu1(
      poly_pow(IntPolynomial::from_coeffs({1, 1}), 2 * p.g),
      IntPolynomial::from_coeffs({1, 0, -1}));
  return ab_equivariant_series(p) * jacobian_and_bu1;
}

IntPolynomial ordinary_nonfixed(GenusParams p) {
  return psl_even_poincare(p) *
         poly_pow(IntPolynomial::from_coeffs({1, 1}), 2 * p.g);
}

IntPolynomial ordinary_nonfixed_bundle(GenusParams p) {
  return psu_poly(p) * poly_pow(IntPolynomial::from_coeffs({1, 1}), 2 * p.g);
}

IntPolynomial psl_even_poincare(GenusParams p) {
  return psu_poly(p) + gamma2_invariant_strata(p);
}

std::vector<Table1Row> table1_rows() {
  return {
      {"H*_eq(X(pi))", true, "nonfixed-determinant tensor decomposition"},
      {"H*_eq(R(pi))", true, "equivariant gauge-theory computation"},
      {"H*(X(pi))", false, "Jacobian factorization of ordinary cohomology"},
      {"H*(R(pi))", false, "Jacobian factorization of ordinary cohomology"},
      {"H*_eq(X0(pi))", false, "twisted summands in middle degrees"},
      {"H*_eq(R0(pi))", true, "equivariant gauge-theory computation"},
      {"H*(X0(pi))", false, "nontrivial action in ordinary cohomology"},
      {"H*(R0(pi))", false, "known action on the compact representation variety"},
      {"H*(Xhat_o(pi))", true, "two-torsion quotient, odd component"},
      {"H*(Rhat_o(pi))", true, "two-torsion quotient, odd component"},
      {"H*(Xhat_e(pi))", false, "two-torsion quotient, even component"},
      {"H*(Rhat_e(pi))", false, "two-torsion quotient, even component"},
  };
}

}  // namespace charvar
