#include "charvar/output.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace charvar {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string canonical_tag(Space s) {
  switch (s) {
    case Space::R0: return "R0";
    case Space::R0_irr: return "R0_irr";
    case Space::X0: return "X0";
    case Space::X0_irr: return "X0_irr";
    case Space::X0_eq: return "X0_eq";
    case Space::X_eq: return "X_eq";
    case Space::R_eq: return "R_eq";
    case Space::X_ord: return "X_ord";
    case Space::R_ord: return "R_ord";
    case Space::N0_20: return "N0_20";
    case Space::PSL_even: return "PSL_even";
    case Space::PSL_odd_flagsonly: return "PSL_odd_flagsonly";
    case Space::SymProd: return "SymProd";
    case Space::PrymCover: return "PrymCover";
  }
  return "";
}

ordered_json row_to_json(const TorelliRow& row) {
  ordered_json j;
  j["degree"] = row.degree;
  if (row.total_known) {
    j["total"] = row.total.get_str();
    j["invariant"] = row.invariant.get_str();
  } else {
    j["total"] = nullptr;
    j["invariant"] = nullptr;
  }
  j["prym"] = row.prym.get_str();
  j["torelli_trivial"] = row.torelli_trivial;
  j["prym_torelli_trivial"] = row.prym_torelli_trivial;
  return j;
}

// LaTeX rendering of the ASCII cohomology-group labels used in Table 1.
std::string latex_label(const std::string& ascii) {
  static const std::vector<std::pair<std::string, std::string>> kMap = {
      {"H*_eq(X(pi))", "$H^\\ast_{eq.}({\\mathfrak X}(\\pi))$"},
      {"H*_eq(R(pi))", "$H^\\ast_{eq.}({\\mathfrak R}(\\pi))$"},
      {"H*(X(pi))", "$H^\\ast({\\mathfrak X}(\\pi))$"},
      {"H*(R(pi))", "$H^\\ast({\\mathfrak R}(\\pi))$"},
      {"H*_eq(X0(pi))", "$H^\\ast_{eq.}({\\mathfrak X}_0(\\pi))$"},
      {"H*_eq(R0(pi))", "$H^\\ast_{eq.}({\\mathfrak R}_0(\\pi))$"},
      {"H*(X0(pi))", "$H^\\ast({\\mathfrak X}_0(\\pi))$"},
      {"H*(R0(pi))", "$H^\\ast({\\mathfrak R}_0(\\pi))$"},
      {"H*(Xhat_o(pi))", "$H^\\ast(\\widehat{\\mathfrak X}_o(\\pi))$"},
      {"H*(Rhat_o(pi))", "$H^\\ast(\\widehat{\\mathfrak R}_o(\\pi))$"},
      {"H*(Xhat_e(pi))", "$H^\\ast(\\widehat{\\mathfrak X}_e(\\pi))$"},
      {"H*(Rhat_e(pi))", "$H^\\ast(\\widehat{\\mathfrak R}_e(\\pi))$"},
  };
  for (const auto& [key, value] : kMap) {
    if (key == ascii) return value;
  }
  return ascii;
}

}  // namespace

std::string SpaceId::label() const {
  std::string base = canonical_tag(tag);
  if (space_needs_n(tag)) {
    base += "(" + std::to_string(n) + ")";
  }
  return base;
}

std::optional<Space> parse_space(const std::string& token) {
  std::string key;
  key.reserve(token.size());
  for (char ch : token) {
    if (ch == '_' || ch == '-') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  static const std::vector<std::pair<std::string, Space>> kTokens = {
      {"r0", Space::R0},
      {"r0irr", Space::R0_irr},
      {"x0", Space::X0},
      {"x0irr", Space::X0_irr},
      {"x0eq", Space::X0_eq},
      {"xeq", Space::X_eq},
      {"req", Space::R_eq},
      {"xord", Space::X_ord},
      {"rord", Space::R_ord},
      {"n020", Space::N0_20},
      {"n0", Space::N0_20},
      {"psleven", Space::PSL_even},
      {"pslodd", Space::PSL_odd_flagsonly},
      {"psloddflagsonly", Space::PSL_odd_flagsonly},
      {"symprod", Space::SymProd},
      {"prymcover", Space::PrymCover},
  };
  for (const auto& [tok, space] : kTokens) {
    if (tok == key) return space;
  }
  return std::nullopt;
}

bool space_is_series(Space s) {
  return s == Space::X0_eq || s == Space::X_eq || s == Space::R_eq;
}

bool space_needs_n(Space s) {
  return s == Space::SymProd || s == Space::PrymCover;
}

std::string to_json(const OutputDocument& doc) {
  ordered_json j;
  j["space"] = doc.space;
  j["genus"] = doc.genus;
  if (doc.truncation) {
    j["truncation"] = *doc.truncation;
  } else {
    j["truncation"] = "exact";
  }
  ordered_json betti = ordered_json::array();
  for (const mpz_class& b : doc.betti) betti.push_back(b.get_str());
  j["betti"] = betti;
  if (doc.decomposition) {
    ordered_json rows = ordered_json::array();
    for (const TorelliRow& row : *doc.decomposition) {
      rows.push_back(row_to_json(row));
    }
    j["decomposition"] = rows;
  }
  ordered_json prov = ordered_json::array();
  for (const auto& [quantity, route] : doc.provenance) {
    prov.push_back(ordered_json::array({quantity, route}));
  }
  j["provenance"] = prov;
  return j.dump(2) + "\n";
}

std::string to_csv(const OutputDocument& doc) {
  std::ostringstream out;
  if (doc.decomposition) {
    out << "degree,total,invariant,prym,torelli_trivial,prym_torelli_trivial\n";
    for (const TorelliRow& row : *doc.decomposition) {
      out << row.degree << ",";
      if (row.total_known) {
        out << row.total.get_str() << "," << row.invariant.get_str();
      } else {
        out << "unknown,unknown";
      }
      out << "," << row.prym.get_str() << ","
          << (row.torelli_trivial ? "true" : "false") << ","
          << (row.prym_torelli_trivial ? "true" : "false") << "\n";
    }
    return out.str();
  }
  out << "degree,betti\n";
  for (size_t d = 0; d < doc.betti.size(); ++d) {
    out << d << "," << doc.betti[d].get_str() << "\n";
  }
  return out.str();
}

std::string to_latex(const OutputDocument& doc) {
  std::ostringstream out;
  if (doc.decomposition) {
    out << "\\begin{tabular}{|c|c|c|c|c|}\n\\hline\n"
        << "$p$ & total & invariant & twisted & Torelli trivial \\\\\n"
        << "\\hline\n";
    for (const TorelliRow& row : *doc.decomposition) {
      out << row.degree << " & ";
      if (row.total_known) {
        out << row.total.get_str() << " & " << row.invariant.get_str();
      } else {
        out << "unknown & unknown";
      }
      out << " & " << row.prym.get_str() << " & "
          << (row.torelli_trivial ? "yes" : "no") << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
  }
  out << "\\begin{tabular}{|c|c|}\n\\hline\n"
      << "$p$ & $\\dim H^p$ \\\\\n\\hline\n";
  for (size_t d = 0; d < doc.betti.size(); ++d) {
    out << d << " & " << doc.betti[d].get_str() << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

std::string table1_to_json(const std::vector<Table1Row>& rows) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  for (const Table1Row& row : rows) {
    ordered_json r;
    r["space"] = row.space;
    r["trivial"] = row.trivial;
    r["basis"] = row.basis;
    arr.push_back(r);
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string table1_to_latex(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "\\begin{tabular}{||c|c|c||}\n\\hline\\hline\n"
      << "Cohomology group & Torelli acts trivially? & Basis \\\\\n"
      << "\\hline\\hline\n";
  for (const Table1Row& row : rows) {
    out << latex_label(row.space) << " & " << (row.trivial ? "yes" : "no")
        << " & " << row.basis << " \\\\\n\\hline\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

}  // namespace charvar
