#pragma once

#include <string>
#include <utility>
#include <vector>

namespace piref {

enum class CheckOutcome { Pass, Fail, Unknown };

inline const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    default: return "unknown";
  }
}

struct CheckItem {
  std::string label;    // stable item identifier, e.g. "axiom-a #3"
  std::string aspect;   // "preservation", "reflection", ... or empty
  CheckOutcome outcome = CheckOutcome::Pass;
  std::string detail;   // witness / reason; empty for passes
};

/// Aggregated outcome of a corpus-based check. Verdicts are corpus-relative:
/// the report records what was sampled and how each item fared, never a
/// universal claim.
class CheckReport {
public:
  CheckReport() = default;
  explicit CheckReport(std::string check_name)
      : name_(std::move(check_name)) {}

  const std::string& name() const { return name_; }
  const std::vector<CheckItem>& items() const { return items_; }

  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void add_pass(std::string label, std::string aspect = {}) {
    items_.push_back({std::move(label), std::move(aspect),
                      CheckOutcome::Pass, {}});
  }
  void add_fail(std::string label, std::string aspect, std::string detail) {
    items_.push_back({std::move(label), std::move(aspect), CheckOutcome::Fail,
                      std::move(detail)});
  }
  void add_unknown(std::string label, std::string aspect, std::string detail) {
    items_.push_back({std::move(label), std::move(aspect),
                      CheckOutcome::Unknown, std::move(detail)});
  }

  /// Append another report's items under a label prefix.
  void absorb(const CheckReport& sub, const std::string& prefix) {
    for (CheckItem item : sub.items()) {
      item.label = prefix + item.label;
      items_.push_back(std::move(item));
    }
  }

  int count(CheckOutcome o, const std::string& aspect = {}) const {
    int n = 0;
    for (const CheckItem& item : items_)
      if (item.outcome == o && (aspect.empty() || item.aspect == aspect)) ++n;
    return n;
  }
  int pass_count() const { return count(CheckOutcome::Pass); }
  int fail_count() const { return count(CheckOutcome::Fail); }
  int unknown_count() const { return count(CheckOutcome::Unknown); }

  bool no_failures() const { return fail_count() == 0; }
  bool all_pass() const { return fail_count() == 0 && unknown_count() == 0; }

  /// CLI exit-code mapping: 0 all pass, 1 counterexample found,
  /// 2 inconclusive (Unknowns only).
  int exit_code() const {
    if (fail_count() > 0) return 1;
    if (unknown_count() > 0) return 2;
    return 0;
  }

private:
  std::string name_;
  std::vector<CheckItem> items_;
};

}  // namespace piref
