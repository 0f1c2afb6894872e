#include "hoc/check.hpp"

#include <utility>

namespace hoc {

CheckRecorder::CheckRecorder(std::string name, std::string identity, std::string scope) {
  result_.name = std::move(name);
  result_.identity = std::move(identity);
  result_.scope = std::move(scope);
}

void CheckRecorder::record(bool ok, const std::function<std::vector<std::string>()>& inputs,
                           const std::function<std::string()>& residual) {
  ++result_.cases;
  if (ok) return;
  failed_ = true;
  if (result_.failures.size() < kMaxWitnesses) result_.failures.push_back({inputs(), residual()});
}

CheckResult CheckRecorder::finish() && { return std::move(result_); }

CheckResult verdict_agreement(const std::string& name, const CheckResult& criterion, const CheckResult& sampled) {
  CheckRecorder rec(name, "verdict(" + criterion.name + ") == verdict(" + sampled.name + ")",
                    "one comparison of the two verdicts");
  const bool a = criterion.passed();
  const bool b = sampled.passed();
  rec.record(
      a == b, [] { return std::vector<std::string>{}; },
      // Nonzero indicator keeps the witness parseable as a DSL scalar.
      [] { return std::string("1"); });
  return std::move(rec).finish();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

}  // namespace hoc
