#pragma once

#include "charvar/formulas.hpp"

namespace charvar {

// One nonminimal stratum of the circle-action Morse function on the
// fixed-determinant Higgs moduli space. The stratum indexed by d is a
// 2^{2g}-fold cover of the symmetric product S^n M and enters the Poincare
// polynomial with an index shift of t^{2 mu}.
struct StratumSpec {
  int d;    // stratum index, 1 <= d <= g-1
  int mu;   // half the real codimension, mu = g-1+2d
  int n;    // symmetric-product size, n = 2g-2-2d

  StratumSpec(int d_, GenusParams p);
};

// Poincare polynomial of the n-fold symmetric product of the genus-g
// surface: coefficient of x^n in (1+xt)^{2g} / ((1-x)(1-xt^2)), expanded as
// a power series in x with polynomial coefficients.
IntPolynomial sym_product_poincare(int n, GenusParams p);

// Poincare polynomial of the 2^{2g}-fold covering of S^n M determined by the
// two-torsion characters: the base contributes everything, and each of the
// 2^{2g}-1 nontrivial twisting local systems contributes cohomology
// concentrated in the middle degree n with rank binom(2g-2, n).
IntPolynomial prym_cover_poincare(int n, GenusParams p);

// Stratum-sum assembly of the correction polynomial: the contributions of
// all nonminimal strata, sum over d of t^{2 mu_d} P(cover of S^{n_d} M).
// Independent of the closed-form route; their equality is the engine's
// central cross-check.
IntPolynomial c_poly_strata(GenusParams p);

// Poincare polynomial of the fixed-determinant Higgs moduli space assembled
// from the stratification: minimum stratum (the flat moduli space) plus the
// stratum sum.
IntPolynomial m0_poincare_via_strata(GenusParams p);

// Two-torsion-invariant part of the stratum sum: each cover contributes only
// its base S^n M, the twisted summands all lie in nontrivial isotypical
// pieces.
IntPolynomial gamma2_invariant_strata(GenusParams p);

}  // namespace charvar
