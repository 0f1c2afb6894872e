#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hoc/check.hpp"

namespace hoc::cli {

struct SuiteParams {
  int samples = 25;
  int degree = 2;
  int points = 5;
};

/// Outcome of one `hoc check` run, in declaration order.
struct SuiteReport {
  std::string suite;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  SuiteParams params;
  std::string quantifier_scope;
  std::vector<CheckResult> checks;

  bool passed() const { return all_passed(checks); }
};

/// Distinct check scopes joined in order of first appearance.
std::string summarize_scopes(const std::vector<CheckResult>& checks);

/// Stable JSON with keys in schema order, terminated by a newline.
std::string to_json(const SuiteReport& report);

/// One [pass]/[FAIL] line per check followed by its witnesses.
void write_text(std::ostream& out, const SuiteReport& report);

}  // namespace hoc::cli
