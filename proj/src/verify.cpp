#include "charvar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "charvar/formulas.hpp"
#include "charvar/strata.hpp"

namespace charvar {

namespace {

int first_mismatch_degree(const IntPolynomial& a, const IntPolynomial& b) {
  int top = std::max(a.degree(), b.degree());
  for (int d = 0; d <= top; ++d) {
    if (a.coeff(d) != b.coeff(d)) return d;
  }
  return -1;
}

int first_negative_degree(const IntPolynomial& a) {
  for (int d = 0; d <= a.degree(); ++d) {
    if (a.coeff(d) < 0) return d;
  }
  return -1;
}

bool palindromic(const IntPolynomial& a, int top) {
  for (int d = 0; d <= top; ++d) {
    if (a.coeff(d) != a.coeff(top - d)) return false;
  }
  return true;
}

class Checker {
 public:
  explicit Checker(int g) : g_(g) {}

  void fail(const std::string& check, const std::string& detail) {
    issues_.push_back({g_, check, detail});
  }

  void require(bool ok, const std::string& check, const std::string& detail) {
    if (!ok) fail(check, detail);
  }

  std::vector<VerifyIssue> take() { return std::move(issues_); }

 private:
  int g_;
  std::vector<VerifyIssue> issues_;
};

}  // namespace

std::vector<VerifyIssue> verify_genus(int g, bool corrupt) {
  GenusParams p(g);
  Checker ck(g);

  IntPolynomial c;
  bool has_c = true;
  try {
    c = corrupt ? detail::c_poly_closed_corrupted(p) : c_poly_closed(p);
  } catch (const NotDivisible& e) {
    has_c = false;
    ck.fail("c_polynomiality", e.what());
  } catch (const IntegralityViolation& e) {
    has_c = false;
    ck.fail("c_polynomiality", e.what());
  }

  IntPolynomial psu = psu_poly(p);
  IntPolynomial psu_irr = psu_irr_poly(p);
  IntPolynomial strata = c_poly_strata(p);

  if (has_c) {
    int d = first_mismatch_degree(c, strata);
    ck.require(d < 0, "c_identity",
               "closed form and stratum sum disagree, first mismatching "
               "coefficient degree " + std::to_string(d));

    ck.require(first_negative_degree(c) < 0, "c_nonnegative",
               "negative coefficient at degree " +
                   std::to_string(first_negative_degree(c)));
    ck.require(c.degree() == 6 * g - 6, "c_degree",
               "degree " + std::to_string(c.degree()));
    mpz_class expect_lead = (mpz_class(1) << (2 * g)) + g - 2;
    ck.require(c.leading_coeff() == expect_lead, "c_leading",
               "leading coefficient " + c.leading_coeff().get_str());
    ck.require(c.coeff(0) == 0, "c_constant_term",
               "constant term " + c.coeff(0).get_str());
  }

  ck.require(first_negative_degree(psu) < 0, "psu_nonnegative",
             "negative coefficient at degree " +
                 std::to_string(first_negative_degree(psu)));
  ck.require(first_negative_degree(psu_irr) < 0, "psu_irr_nonnegative",
             "negative coefficient at degree " +
                 std::to_string(first_negative_degree(psu_irr)));
  ck.require(psu.degree() == 6 * g - 6, "psu_degree",
             "degree " + std::to_string(psu.degree()));
  ck.require(psu.coeff(0) == 1, "psu_connected",
             "constant term " + psu.coeff(0).get_str());

  if (has_c) {
    IntPolynomial x0 = psu + c;
    ck.require(x0 == x0_poly(p), "x0_additivity", "route disagreement");
    ck.require(x0_irr_poly(p) == psu_irr + c, "x0_irr_additivity",
               "route disagreement");
    ck.require(x0.degree() == 6 * g - 6, "x0_degree",
               "degree " + std::to_string(x0.degree()));
    ck.require(x0.coeff(0) == 1, "x0_connected",
               "constant term " + x0.coeff(0).get_str());

    int d = first_mismatch_degree(m0_poincare_via_strata(p), x0);
    ck.require(d < 0, "higgs_stratum_sum",
               "stratum assembly disagrees with additivity route, first "
               "mismatching coefficient degree " + std::to_string(d));
  }

  for (int n = 0; n <= 2 * g - 2; ++n) {
    IntPolynomial sym = sym_product_poincare(n, p);
    IntPolynomial cover = prym_cover_poincare(n, p);
    ck.require(sym.degree() == (n == 0 ? 0 : 2 * n), "sym_degree",
               "n=" + std::to_string(n));
    ck.require(palindromic(sym, 2 * n), "sym_palindromic",
               "n=" + std::to_string(n));
    ck.require(palindromic(cover, 2 * n), "prym_cover_palindromic",
               "n=" + std::to_string(n));
    mpz_class chi_expect = (n % 2 == 0 ? 1 : -1) *
                           binomial(static_cast<unsigned>(2 * g - 2),
                                    static_cast<unsigned>(n));
    ck.require(sym.eval(-1) == chi_expect, "sym_euler",
               "n=" + std::to_string(n) + " value " + sym.eval(-1).get_str());
  }

  std::vector<int> s_even = even_index_set(p);
  std::vector<int> s_odd = odd_index_set(p);
  ck.require(static_cast<int>(s_even.size()) == g - 2, "even_index_count",
             std::to_string(s_even.size()));
  ck.require(static_cast<int>(s_odd.size()) == g - 1, "odd_index_count",
             std::to_string(s_odd.size()));

  IntPolynomial defect = kirwan_defect(p);
  ck.require(defect.is_zero() == (g == 2), "kirwan_defect_vanishing",
             "defect " + defect.to_string());

  if (has_c) {
    try {
      auto rows = torelli_table_equivariant_even(p, 6 * g - 6);
      IntPolynomial prym_col;
      for (const TorelliRow& row : rows) {
        if (row.total != row.invariant + row.prym || row.invariant < 0) {
          ck.fail("table_consistency", "degree " + std::to_string(row.degree));
        }
        if (g == 2 && row.prym != 0) {
          ck.fail("table_g2_trivial", "degree " + std::to_string(row.degree));
        }
        prym_col = prym_col + IntPolynomial::monomial(row.prym, row.degree);
      }
      ck.require(IntPolynomial::monomial(1, 1) * prym_col == defect,
                 "shifted_defect_law", "kernel degrees off by one");
    } catch (const InconsistentTable& e) {
      ck.fail("table_consistency", e.what());
    }

    IntPolynomial diff = x0_poly(p) - psl_even_poincare(p);
    std::set<int> support;
    for (int d = 0; d <= diff.degree(); ++d) {
      if (diff.coeff(d) != 0) support.insert(d);
    }
    std::set<int> expected;
    for (int d = 1; d <= g - 1; ++d) expected.insert(4 * g - 4 + 2 * d);
    ck.require(support == expected, "invariant_complement_support",
               "support size " + std::to_string(support.size()));

    try {
      GradedDims sl2c = series_expand(sl2c_equivariant_series(p), 4 * g);
      GradedDims tensor = series_expand(tensor_nonfixed_equivariant(p), 4 * g);
      for (int d = 0; d <= 4 * g; ++d) {
        if (sl2c.dims[static_cast<size_t>(d)] < 0) {
          ck.fail("sl2c_series_nonnegative", "degree " + std::to_string(d));
          break;
        }
        if (tensor.dims[static_cast<size_t>(d)] < 0) {
          ck.fail("tensor_series_nonnegative", "degree " + std::to_string(d));
          break;
        }
      }
    } catch (const IntegralityViolation& e) {
      ck.fail("series_integrality", e.what());
    }
  }

  return ck.take();
}

VerifyReport run_verify(int genus_max, int jobs, bool corrupt) {
  VerifyReport report;
  report.genus_max = genus_max;
  if (genus_max < 2) return report;

  std::vector<std::vector<VerifyIssue>> per_genus(
      static_cast<size_t>(genus_max) + 1);
  int worker_count = std::max(1, std::min(jobs, genus_max - 1));
  if (worker_count == 1) {
    for (int g = 2; g <= genus_max; ++g) per_genus[static_cast<size_t>(g)] =
        verify_genus(g, corrupt);
  } else {
    std::atomic<int> next(2);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&]() {
        for (int g = next.fetch_add(1); g <= genus_max; g = next.fetch_add(1)) {
          per_genus[static_cast<size_t>(g)] = verify_genus(g, corrupt);
        }
      });
    }
    for (std::thread& th : workers) th.join();
  }

  for (int g = 2; g <= genus_max; ++g) {
    auto& issues = per_genus[static_cast<size_t>(g)];
    report.issues.insert(report.issues.end(), issues.begin(), issues.end());
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  std::set<int> failing;
  for (const VerifyIssue& issue : report.issues) failing.insert(issue.genus);
  for (int g = 2; g <= report.genus_max; ++g) {
    if (failing.count(g) == 0) out << "ok genus=" << g << "\n";
  }
  for (const VerifyIssue& issue : report.issues) {
    out << "FAIL genus=" << issue.genus << " check=" << issue.check
        << " detail=" << issue.detail << "\n";
  }
  if (report.issues.empty()) {
    out << "verify: all checks passed for genus 2.."
        << report.genus_max << "\n";
  } else {
    out << "verify: " << report.issues.size() << " failure(s)\n";
  }
  return out.str();
}

}  // namespace charvar
