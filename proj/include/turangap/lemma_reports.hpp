#pragma once
// Structured pass/fail reporting for the analytic verifiers. Each check
// stores enough (computed value, reference, tolerance, comparison kind) to
// replay the verdict from the report alone; a grid check whose margin is
// smaller than its discretisation slack is marked inconclusive rather than
// passed or failed.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace turangap {

enum class CheckKind {
  kAbsDiff,   // pass iff |computed - reference| <= tolerance
  kGreater,   // pass iff computed - reference > tolerance
  kLess,      // pass iff reference - computed > tolerance
  kInRange,   // pass iff |computed - reference| < tolerance (open band)
};

struct CheckResult {
  std::string claim;
  double computed = 0;
  double reference = 0;
  double tolerance = 0;
  CheckKind kind = CheckKind::kAbsDiff;
  bool pass = false;
  bool conclusive = true;
};

// Evaluates the verdict from the stored fields. Callers may override
// `conclusive` afterwards when the margin cannot be trusted.
CheckResult make_check(std::string claim, double computed, double reference,
                       double tolerance, CheckKind kind);

struct LemmaReport {
  std::string lemma;  // stable identifier of the claim family
  std::vector<CheckResult> checks;

  bool all_pass() const;
  bool all_conclusive() const;
  // 0 = every check passes, 1 = some conclusive failure, 2 = no failure
  // but at least one inconclusive check.
  int exit_code() const;
  const CheckResult* find(const std::string& claim_substring) const;
};

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const LemmaReport& r);

}  // namespace turangap
