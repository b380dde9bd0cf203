#pragma once

#include <string>
#include <vector>

#include "charvar/output.hpp"

namespace charvar {

struct VerifyIssue {
  int genus = 0;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  int genus_max = 0;
  std::vector<VerifyIssue> issues;  // sorted by genus, then check order
};

// Runs the full identity suite for one genus: closed-form versus stratum-sum
// equality, nonnegativity and integrality, palindromicity of the symmetric
// products, degree and leading-coefficient laws, table consistency, and the
// structural index-set properties. corrupt swaps in the deliberately broken
// correction assembly (negative-path testing).
std::vector<VerifyIssue> verify_genus(int g, bool corrupt);

// Runs verify_genus for 2..genus_max on up to jobs threads; aggregation is
// ordered by genus regardless of scheduling.
VerifyReport run_verify(int genus_max, int jobs, bool corrupt);

// Deterministic plain-text report: one line per genus or per failure.
std::string format_report(const VerifyReport& report);

}  // namespace charvar
