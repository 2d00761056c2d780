// Common result type for theorem checkers.  Conditional theorems evaluate
// their hypotheses first and report kHypothesisNotMet instead of passing
// vacuously.

#ifndef STARLAB_CHECKS_HPP_
#define STARLAB_CHECKS_HPP_

#include <string>
#include <vector>

namespace starlab {

enum class CheckStatus { kPass, kFail, kHypothesisNotMet };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kHypothesisNotMet: return "hypothesis_not_met";
  }
  return "?";
}

struct CheckResult {
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // failing clause and witness, or the unmet hypothesis

  static CheckResult pass() { return {CheckStatus::kPass, ""}; }
  static CheckResult fail(std::string d) {
    return {CheckStatus::kFail, std::move(d)};
  }
  static CheckResult gate(std::string d) {
    return {CheckStatus::kHypothesisNotMet, std::move(d)};
  }
  bool ok() const { return status == CheckStatus::kPass; }
  bool failed() const { return status == CheckStatus::kFail; }
};

}  // namespace starlab

#endif  // STARLAB_CHECKS_HPP_
