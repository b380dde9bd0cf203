#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "charvar/output.hpp"
#include "charvar/verify.hpp"

namespace {

using namespace charvar;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormulaInconsistency = 3;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int formula_error(const std::string& step, const std::string& message) {
  std::cerr << "formula inconsistency in " << step << ": " << message << "\n";
  return kExitFormulaInconsistency;
}

bool route_uses_correction(Space s) {
  return s == Space::X0 || s == Space::X0_irr || s == Space::X0_eq ||
         s == Space::X_eq;
}

std::string emit(const OutputDocument& doc, const std::string& format) {
  if (format == "csv") return to_csv(doc);
  if (format == "latex") return to_latex(doc);
  return to_json(doc);
}

struct BettiArgs {
  std::string space;
  int genus = 0;
  std::optional<int> n;
  std::optional<int> truncate;
  std::string format = "json";
};

OutputDocument betti_document(SpaceId id, GenusParams p,
                              std::optional<int> truncate) {
  OutputDocument doc;
  doc.space = id.label();
  doc.genus = p.g;

  IntPolynomial poly;
  std::optional<RationalFunction> series;
  switch (id.tag) {
    case Space::R0:
      poly = psu_poly(p);
      doc.provenance.emplace_back("betti", "compact-group closed form");
      break;
    case Space::R0_irr:
      poly = psu_irr_poly(p);
      doc.provenance.emplace_back("betti", "irreducible-locus closed form");
      break;
    case Space::X0:
      poly = x0_poly(p);
      doc.provenance.emplace_back(
          "betti", "compact-group closed form plus correction polynomial");
      break;
    case Space::X0_irr:
      poly = x0_irr_poly(p);
      doc.provenance.emplace_back(
          "betti", "irreducible-locus closed form plus correction polynomial");
      break;
    case Space::X0_eq:
      series = sl2c_equivariant_series(p);
      doc.provenance.emplace_back(
          "betti", "equivariant gauge series plus correction polynomial");
      break;
    case Space::X_eq:
      series = tensor_nonfixed_equivariant(p);
      doc.provenance.emplace_back(
          "betti",
          "invariant part tensored with Jacobian and classifying-space factors");
      break;
    case Space::R_eq:
      series = req_equivariant_series(p);
      doc.provenance.emplace_back(
          "betti",
          "equivariant gauge series tensored with Jacobian and "
          "classifying-space factors");
      break;
    case Space::X_ord:
      poly = ordinary_nonfixed(p);
      doc.provenance.emplace_back(
          "betti", "two-torsion invariant part tensored with Jacobian factor");
      doc.provenance.emplace_back(
          "assumption",
          "stratum-wise invariant parts assume the two-torsion action "
          "preserves each stratum");
      break;
    case Space::R_ord:
      poly = ordinary_nonfixed_bundle(p);
      doc.provenance.emplace_back(
          "betti", "compact-group polynomial tensored with Jacobian factor");
      break;
    case Space::N0_20:
      poly = psu_poly(p);
      doc.provenance.emplace_back(
          "betti",
          "flat-moduli identification with the compact-group polynomial");
      break;
    case Space::PSL_even:
      poly = psl_even_poincare(p);
      doc.provenance.emplace_back("betti",
                                  "invariant part assembled stratum-wise");
      doc.provenance.emplace_back(
          "assumption",
          "stratum-wise invariant parts assume the two-torsion action "
          "preserves each stratum");
      break;
    case Space::SymProd:
      poly = sym_product_poincare(id.n, p);
      doc.provenance.emplace_back("betti",
                                  "symmetric-product generating function");
      break;
    case Space::PrymCover:
      poly = prym_cover_poincare(id.n, p);
      doc.provenance.emplace_back(
          "betti",
          "symmetric product plus middle-degree cover correction");
      break;
    case Space::PSL_odd_flagsonly:
      // Rejected before reaching this point.
      break;
  }

  if (series) {
    GradedDims dims = series_expand(*series, *truncate);
    doc.betti = dims.dims;
    doc.truncation = *truncate;
  } else {
    int top = truncate ? *truncate : std::max(poly.degree(), 0);
    doc.betti.reserve(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) doc.betti.push_back(poly.coeff(d));
    if (truncate) doc.truncation = *truncate;
  }
  return doc;
}

int run_betti(const BettiArgs& args, int genus_cap, bool corrupt) {
  std::optional<Space> tag = parse_space(args.space);
  if (!tag) return usage_error("unknown space '" + args.space + "'");
  if (args.genus < 2) return usage_error("genus must be at least 2");
  if (args.genus > genus_cap) {
    return usage_error("genus exceeds configured cap " +
                       std::to_string(genus_cap));
  }
  if (*tag == Space::PSL_odd_flagsonly) {
    return usage_error(
        "space carries decomposition flags only; use torelli-table --odd");
  }
  if (space_needs_n(*tag)) {
    if (!args.n) return usage_error("--n is required for this space");
    if (*args.n < 0) return usage_error("--n must be nonnegative");
  } else if (args.n) {
    return usage_error("--n is only meaningful for SymProd and PrymCover");
  }
  if (space_is_series(*tag) && !args.truncate) {
    return usage_error(
        "this space has an infinite Poincare series; --truncate is required");
  }
  if (args.truncate && *args.truncate < 0) {
    return usage_error("--truncate must be nonnegative");
  }

  SpaceId id{*tag, args.n.value_or(-1)};
  GenusParams p(args.genus);
  try {
    if (corrupt && route_uses_correction(id.tag)) {
      // The hook swaps in the mis-transcribed correction assembly; its
      // divisibility certificate fails, aborting the route.
      detail::c_poly_closed_corrupted(p);
    }
    OutputDocument doc = betti_document(id, p, args.truncate);
    std::cout << emit(doc, args.format);
  } catch (const NotDivisible& e) {
    return formula_error(id.label() + " route", e.what());
  } catch (const IntegralityViolation& e) {
    return formula_error(id.label() + " route", e.what());
  } catch (const NotASeries& e) {
    return formula_error(id.label() + " route", e.what());
  }
  return 0;
}

int run_torelli_table(int genus, bool odd, std::optional<int> truncate,
                      const std::string& format, int genus_cap, bool corrupt) {
  if (genus < 2) return usage_error("genus must be at least 2");
  if (genus > genus_cap) {
    return usage_error("genus exceeds configured cap " +
                       std::to_string(genus_cap));
  }
  if (odd && truncate) {
    return usage_error("--truncate does not apply to the odd table");
  }
  if (truncate && *truncate < 0) {
    return usage_error("--truncate must be nonnegative");
  }

  GenusParams p(genus);
  OutputDocument doc;
  doc.genus = genus;
  try {
    if (odd) {
      doc.space = "PSL_odd_flagsonly";
      doc.decomposition = torelli_table_odd(p);
      doc.provenance.emplace_back(
          "decomposition",
          "splitting at degrees 6g-6-q for odd q; totals not computed");
      doc.provenance.emplace_back(
          "prym", "twisted multiplicity (2^(2g)-1)*binom(2g-2,q)");
    } else {
      if (corrupt) {
        detail::c_poly_closed_corrupted(p);
      }
      int trunc = truncate.value_or(4 * genus);
      doc.space = "X0_eq";
      doc.truncation = trunc;
      auto rows = torelli_table_equivariant_even(p, trunc);
      doc.betti.reserve(rows.size());
      for (const TorelliRow& row : rows) doc.betti.push_back(row.total);
      doc.decomposition = std::move(rows);
      doc.provenance.emplace_back(
          "betti", "equivariant gauge series plus correction polynomial");
      doc.provenance.emplace_back(
          "decomposition",
          "splitting at degrees 6g-6-q for even q; invariant = total - prym");
      doc.provenance.emplace_back(
          "prym", "twisted multiplicity (2^(2g)-1)*binom(2g-2,q)");
    }
    std::cout << emit(doc, format);
  } catch (const NotDivisible& e) {
    return formula_error("decomposition table", e.what());
  } catch (const IntegralityViolation& e) {
    return formula_error("decomposition table", e.what());
  } catch (const InconsistentTable& e) {
    return formula_error("decomposition table", e.what());
  }
  return 0;
}

int run_verify_cmd(int genus_max, int jobs, int genus_cap, bool corrupt) {
  if (genus_max < 2) return usage_error("--genus-max must be at least 2");
  if (genus_max > genus_cap) {
    return usage_error("--genus-max exceeds configured cap " +
                       std::to_string(genus_cap));
  }
  if (jobs < 1) return usage_error("--jobs must be at least 1");
  VerifyReport report = run_verify(genus_max, jobs, corrupt);
  std::cout << format_report(report);
  return report.issues.empty() ? 0 : kExitVerifyFailure;
}

int run_table1(const std::string& format) {
  auto rows = table1_rows();
  if (format == "latex") {
    std::cout << table1_to_latex(rows);
  } else {
    std::cout << table1_to_json(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "charvar: exact Betti tables for surface-group character varieties "
      "and Higgs moduli"};
  app.require_subcommand(1);

  int genus_cap = 64;
  app.add_option("--genus-cap", genus_cap,
                 "configured upper bound on accepted genus")
      ->capture_default_str();
  bool corrupt = false;
  app.add_flag("--corrupt-formula-hook", corrupt)->group("");

  auto format_check = CLI::IsMember({"json", "csv", "latex"});

  BettiArgs betti_args;
  CLI::App* betti = app.add_subcommand(
      "betti", "Betti numbers of one space at one genus");
  betti->fallthrough();
  betti->add_option("--space", betti_args.space, "space identifier")
      ->required();
  betti->add_option("--genus", betti_args.genus, "surface genus (>= 2)")
      ->required();
  betti->add_option("--n", betti_args.n,
                    "symmetric-product size (SymProd/PrymCover only)");
  betti->add_option("--truncate", betti_args.truncate,
                    "series truncation order");
  betti->add_option("--format", betti_args.format, "output format")
      ->check(format_check)
      ->capture_default_str();

  int verify_genus_max = 0;
  int verify_jobs = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the cross-validation suite over a genus range");
  verify->fallthrough();
  verify->add_option("--genus-max", verify_genus_max,
                     "largest genus to check")
      ->required();
  verify->add_option("--jobs", verify_jobs, "worker threads")
      ->capture_default_str();

  int table_genus = 0;
  bool table_odd = false;
  std::optional<int> table_truncate;
  std::string table_format = "json";
  CLI::App* torelli = app.add_subcommand(
      "torelli-table", "per-degree decomposition table");
  torelli->fallthrough();
  torelli->add_option("--genus", table_genus, "surface genus (>= 2)")
      ->required();
  torelli->add_flag("--odd", table_odd, "odd (degree-one determinant) table");
  torelli->add_option("--truncate", table_truncate,
                      "truncation order for the even table (default 4g)");
  torelli->add_option("--format", table_format, "output format")
      ->check(format_check)
      ->capture_default_str();

  std::string table1_format = "json";
  CLI::App* table1 = app.add_subcommand(
      "table1", "triviality table for the twelve cohomology groups");
  table1->fallthrough();
  table1->add_option("--format", table1_format, "output format")
      ->check(CLI::IsMember({"json", "latex"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (betti->parsed()) return run_betti(betti_args, genus_cap, corrupt);
  if (verify->parsed()) {
    return run_verify_cmd(verify_genus_max, verify_jobs, genus_cap, corrupt);
  }
  if (torelli->parsed()) {
    return run_torelli_table(table_genus, table_odd, table_truncate,
                             table_format, genus_cap, corrupt);
  }
  if (table1->parsed()) return run_table1(table1_format);
  return kExitUsage;
}
