#include "hoc_cli/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace hoc::cli {

std::string summarize_scopes(const std::vector<CheckResult>& checks) {
  std::vector<std::string> seen;
  for (const auto& c : checks) {
    if (!c.scope.empty() && std::find(seen.begin(), seen.end(), c.scope) == seen.end()) seen.push_back(c.scope);
  }
  std::string joined;
  for (const auto& s : seen) {
    if (!joined.empty()) joined += "; ";
    joined += s;
  }
  return joined;
}

std::string to_json(const SuiteReport& report) {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json failures = ordered_json::array();
    for (const auto& w : c.failures) {
      failures.push_back(ordered_json{{"inputs", w.inputs}, {"residual", w.residual}});
    }
    checks.push_back(ordered_json{{"name", c.name},
                                  {"paper_ref", c.identity},
                                  {"cases", c.cases},
                                  {"failures", std::move(failures)},
                                  {"passed", c.passed()}});
  }
  const ordered_json doc{
      {"suite", report.suite},
      {"m", report.m},
      {"n", report.n},
      {"seed", report.seed},
      {"params",
       ordered_json{{"samples", report.params.samples},
                    {"degree", report.params.degree},
                    {"points", report.params.points}}},
      {"quantifier_scope", report.quantifier_scope},
      {"checks", std::move(checks)},
      {"passed", report.passed()},
  };
  return doc.dump(2) + "\n";
}

void write_text(std::ostream& out, const SuiteReport& report) {
  out << "suite " << report.suite << "  m=" << report.m << " n=" << report.n << " seed=" << report.seed << "\n";
  out << "scope: " << report.quantifier_scope << "\n";
  for (const auto& c : report.checks) {
    out << (c.passed() ? "[pass] " : "[FAIL] ") << c.name << "  (" << c.cases << " cases)  " << c.identity << "\n";
    for (const auto& w : c.failures) {
      out << "    inputs:";
      for (const auto& in : w.inputs) out << "  " << in;
      out << "\n    residual: " << w.residual << "\n";
    }
  }
  out << (report.passed() ? "PASSED" : "FAILED") << "\n";
}

}  // namespace hoc::cli
