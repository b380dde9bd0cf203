#pragma once

#include <string>
#include <vector>

#include "charvar/strata.hpp"

namespace charvar {

// One degree of a mapping-class-group decomposition table. total splits as
// invariant + prym, where prym collects the twisted summands permuted by the
// group and invariant is the part on which the Torelli group acts trivially.
// Only the prym column is known in the odd table, so total_known marks
// whether total/invariant carry real data.
struct TorelliRow {
  int degree = 0;
  mpz_class total;
  mpz_class invariant;
  mpz_class prym;
  bool torelli_trivial = true;
  bool prym_torelli_trivial = true;
  bool total_known = true;
};

// dim of the q-th exterior power of the 2g-2 dimensional anti-invariant
// subspace of a double cover: binom(2g-2, q).
mpz_class prym_dim(int q, GenusParams p);

// Degrees with twisted summands in the even (fixed determinant, equivariant)
// case: S = {2, 4, ..., 2g-4}, empty at g = 2.
std::vector<int> even_index_set(GenusParams p);

// Odd-degree counterpart: S~ = {1, 3, ..., 2g-3}.
std::vector<int> odd_index_set(GenusParams p);

// Twisted (non-invariant) part of the even equivariant splitting as a
// polynomial: sum over q in S of (2^{2g}-1) binom(2g-2,q) t^{6g-6-q}. This
// is the prym column of the even table.
IntPolynomial even_twisted_poly(GenusParams p);

// Graded dimension of the kernels obstructing Kirwan surjectivity for the
// fixed-determinant Higgs space: one degree above each splitting degree,
// (2^{2g}-1) sum over q in S of binom(2g-2,q) t^{6g-5-q}. Zero iff g = 2.
IntPolynomial kirwan_defect(GenusParams p);

// Decomposition of the equivariant cohomology of the SL(2,C) character
// variety by degree, up to the given truncation. Throws InconsistentTable
// if any degree would need a negative invariant part.
std::vector<TorelliRow> torelli_table_equivariant_even(GenusParams p,
                                                       int truncation);

// Odd (degree-one determinant) table for degrees 0..6g-6: only the prym
// column and the action flags are available, totals are marked unknown.
std::vector<TorelliRow> torelli_table_odd(GenusParams p);

// Equivariant series for the full (nonfixed determinant) SL(2,C)
// representation space: invariant part of the fixed-determinant series
// tensored with the Jacobian torus and a BU(1) factor.
RationalFunction tensor_nonfixed_equivariant(GenusParams p);

// Equivariant series for the full compact-group representation space; the
// two-torsion action is trivial here, so no prym subtraction occurs.
RationalFunction req_equivariant_series(GenusParams p);

// Ordinary cohomology of the nonfixed-determinant Higgs space: two-torsion
// invariant part of the fixed-determinant answer times the Jacobian factor
// (1+t)^{2g}.
IntPolynomial ordinary_nonfixed(GenusParams p);

// Companion route on the compact side, where the two-torsion action on the
// flat moduli space is trivial: psu_poly times (1+t)^{2g}.
IntPolynomial ordinary_nonfixed_bundle(GenusParams p);

// Betti polynomial of the even PSL(2,C) component, the two-torsion quotient
// of the fixed-determinant Higgs space: rational cohomology of the quotient
// is the invariant part, assembled stratum-wise.
IntPolynomial psl_even_poincare(GenusParams p);

// One row of the triviality table: cohomology-group label, whether the full
// Torelli action is trivial, and the route that decides it.
struct Table1Row {
  std::string space;
  bool trivial = false;
  std::string basis;
};

// The twelve-row triviality table for genus > 3, fixed data independent of
// any genus parameter.
std::vector<Table1Row> table1_rows();

}  // namespace charvar
