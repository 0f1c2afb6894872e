#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hoc {

/// A failing case: the inputs and the nonzero residual, all as DSL text so the
/// case can be replayed.
struct Witness {
  std::vector<std::string> inputs;
  std::string residual;
};

/// Outcome of one exactly-checked identity over a family of cases.
struct CheckResult {
  std::string name;
  std::string identity;  // the identity being checked, human-readable
  std::string scope;     // what the cases quantify over
  std::size_t cases = 0;
  std::vector<Witness> failures;

  bool passed() const { return failures.empty(); }
};

/// Accumulates cases for one CheckResult. Only the first kMaxWitnesses
/// failures are kept; witness text is rendered only for failures.
class CheckRecorder {
 public:
  static constexpr std::size_t kMaxWitnesses = 5;

  CheckRecorder(std::string name, std::string identity, std::string scope = {});

  /// Counts one case; when `ok` is false records a witness.
  void record(bool ok, const std::function<std::vector<std::string>()>& inputs,
              const std::function<std::string()>& residual);

  bool any_failed() const { return failed_; }
  CheckResult finish() &&;

 private:
  CheckResult result_;
  bool failed_ = false;
};

/// Check that passes iff the verdicts of two other checks coincide.
CheckResult verdict_agreement(const std::string& name, const CheckResult& criterion, const CheckResult& sampled);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace hoc
