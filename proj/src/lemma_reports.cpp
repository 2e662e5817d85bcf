#include "turangap/lemma_reports.hpp"

#include <cmath>

namespace turangap {

namespace {
const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::kAbsDiff: return "abs-diff";
    case CheckKind::kGreater: return "greater-by";
    case CheckKind::kLess: return "less-by";
    case CheckKind::kInRange: return "in-range";
  }
  return "?";
}
}  // namespace

CheckResult make_check(std::string claim, double computed, double reference,
                       double tolerance, CheckKind kind) {
  CheckResult c;
  c.claim = std::move(claim);
  c.computed = computed;
  c.reference = reference;
  c.tolerance = tolerance;
  c.kind = kind;
  switch (kind) {
    case CheckKind::kAbsDiff:
      c.pass = std::abs(computed - reference) <= tolerance;
      break;
    case CheckKind::kGreater:
      c.pass = computed - reference > tolerance;
      break;
    case CheckKind::kLess:
      c.pass = reference - computed > tolerance;
      break;
    case CheckKind::kInRange:
      c.pass = std::abs(computed - reference) < tolerance;
      break;
  }
  return c;
}

bool LemmaReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool LemmaReport::all_conclusive() const {
  for (const auto& c : checks)
    if (!c.conclusive) return false;
  return true;
}

int LemmaReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (!c.conclusive) {
      inconclusive = true;
    } else if (!c.pass) {
      return 1;
    }
  }
  return inconclusive ? 2 : 0;
}

const CheckResult* LemmaReport::find(const std::string& claim_substring) const {
  for (const auto& c : checks)
    if (c.claim.find(claim_substring) != std::string::npos) return &c;
  return nullptr;
}

nlohmann::json to_json(const CheckResult& c) {
  return {{"claim", c.claim},          {"computed", c.computed},
          {"reference", c.reference},  {"tolerance", c.tolerance},
          {"comparison", kind_name(c.kind)}, {"pass", c.pass},
          {"conclusive", c.conclusive}};
}

nlohmann::json to_json(const LemmaReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"lemma", r.lemma},
          {"checks", checks},
          {"pass", r.all_pass()},
          {"conclusive", r.all_conclusive()}};
}

}  // namespace turangap
