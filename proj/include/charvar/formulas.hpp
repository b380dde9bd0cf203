#pragma once

#include "charvar/rational.hpp"

namespace charvar {

// Genus of the underlying closed oriented surface. Everything downstream
// assumes g >= 2; the complex dimension of the fixed-determinant moduli
// spaces is 3g-3 and the real one 6g-6.
struct GenusParams {
  int g;

  explicit GenusParams(int genus) : g(genus) {
    if (genus < 2) {
      throw std::domain_error("GenusParams: genus must be at least 2");
    }
  }
};

// epsilon(2,k): 0 for k even, 1 for k odd.
inline int eps2(int k) { return k & 1; }

// Equivariant Poincare series of the gauge-group classifying space minus the
// unstable contribution:
//   ((1+t^3)^{2g} - t^{2g+2} (1+t)^{2g}) / ((1-t^2)(1-t^4)).
// The same expression serves as the semistable-stratum series in the
// additivity statement for the complex character variety.
RationalFunction ab_equivariant_series(GenusParams p);

// Correction polynomial C(t,g): the five-term closed form assembled over a
// common denominator with exact rational scalars, then certified to be an
// integer polynomial. Throws NotDivisible / IntegralityViolation when the
// assembly fails to simplify (a transcription bug, exercised in tests).
IntPolynomial c_poly_closed(GenusParams p);

// Poincare polynomial of the irreducible locus of the SU(2) representation
// variety with fixed trivial determinant.
IntPolynomial psu_irr_poly(GenusParams p);

// Poincare polynomial of the full SU(2) representation variety; equals the
// irreducible-locus polynomial plus the reducible-locus corrections.
IntPolynomial psu_poly(GenusParams p);

// Poincare polynomial of the SL(2,C) character variety: psu + C.
IntPolynomial x0_poly(GenusParams p);

// Same additivity for the irreducible locus: psu_irr + C.
IntPolynomial x0_irr_poly(GenusParams p);

// Equivariant Poincare series for the SL(2,C) representation space:
// ab_equivariant_series + C as a rational function.
RationalFunction sl2c_equivariant_series(GenusParams p);

namespace detail {

// Deliberately mis-assembled C(t,g) for negative tests and the CLI
// corruption hook: one numerator exponent is off by one, which leaves an
// uncancelled pole and trips the divisibility check for every genus.
IntPolynomial c_poly_closed_corrupted(GenusParams p);

}  // namespace detail

}  // namespace charvar
