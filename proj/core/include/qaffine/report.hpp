#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qaffine {

struct SafeWindow {
  long cells = 0;
  int mlo = 0, mhi = 0, nlo = 0, nhi = 0;
};

struct CheckResult {
  std::string suite;   // logical group ("rmatrix", "rll", suite name, ...)
  std::string name;    // check / relation name, unique within the group
  std::string status;  // "pass" | "fail" | "skipped"
  std::vector<std::string> details;  // failing cells, discovered values, notes
  std::optional<SafeWindow> window;
  long elapsed_ms = 0;

  bool passed() const { return status == "pass"; }
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  /// Deterministic order: by (suite, name).
  void sort();
  bool all_pass() const;
  bool any_fail() const;
  bool any_skipped() const;

  /// Text rendering omits timings so identical configs give identical
  /// bytes; the JSON rendering carries elapsed_ms.
  void to_text(std::ostream& os) const;
  std::string to_json() const;
};

CheckResult make_pass(std::string suite, std::string name);
CheckResult make_fail(std::string suite, std::string name,
                      std::vector<std::string> details);

}  // namespace qaffine
