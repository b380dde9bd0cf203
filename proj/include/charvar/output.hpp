#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charvar/actions.hpp"

namespace charvar {

// Computation targets addressable from the command line. Each tag maps to
// exactly one library route; the mapping is recorded in the provenance
// entries of every emitted document.
enum class Space {
  R0,              // compact-group representation variety, fixed determinant
  R0_irr,          // its irreducible locus
  X0,              // SL(2,C) character variety, fixed determinant
  X0_irr,          // its irreducible locus
  X0_eq,           // equivariant series, fixed determinant
  X_eq,            // equivariant series, nonfixed determinant
  R_eq,            // equivariant series, compact group, nonfixed determinant
  X_ord,           // ordinary cohomology, nonfixed determinant
  R_ord,           // ordinary cohomology, compact group, nonfixed determinant
  N0_20,           // flat/semistable bundle moduli, via the same polynomial
  PSL_even,        // even PSL(2,C) component (two-torsion quotient)
  PSL_odd_flagsonly,  // odd component: decomposition flags only
  SymProd,         // symmetric product of the surface (needs n)
  PrymCover,       // its two-torsion cover (needs n)
};

struct SpaceId {
  Space tag;
  int n = -1;  // only meaningful for SymProd / PrymCover

  std::string label() const;
};

// Accepts the canonical tag spelling and the compact CLI spelling
// (underscores optional, case-insensitive): "X0_eq" and "X0eq" both parse.
std::optional<Space> parse_space(const std::string& token);

bool space_is_series(Space s);
bool space_needs_n(Space s);

// Everything a single CLI invocation emits: graded dimensions, an optional
// per-degree decomposition, and provenance pairs naming the route behind
// each quantity.
struct OutputDocument {
  std::string space;
  int genus = 0;
  // Truncation order of the betti list; empty when the list is an exact,
  // complete polynomial.
  std::optional<int> truncation;
  std::vector<mpz_class> betti;
  std::optional<std::vector<TorelliRow>> decomposition;
  std::vector<std::pair<std::string, std::string>> provenance;
};

std::string to_json(const OutputDocument& doc);
std::string to_csv(const OutputDocument& doc);
std::string to_latex(const OutputDocument& doc);

std::string table1_to_json(const std::vector<Table1Row>& rows);
std::string table1_to_latex(const std::vector<Table1Row>& rows);

}  // namespace charvar
