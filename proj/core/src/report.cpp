#include "qaffine/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace qaffine {

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     return a.name < b.name;
                   });
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status != "pass") return false;
  return !checks.empty();
}

bool Report::any_fail() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

bool Report::any_skipped() const {
  for (const auto& c : checks)
    if (c.status == "skipped") return true;
  return false;
}

void Report::to_text(std::ostream& os) const {
  for (const auto& c : checks) {
    os << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP")
       << "] " << c.suite << "/" << c.name;
    if (c.window)
      os << "  safe_window=[" << c.window->mlo << ".." << c.window->mhi
         << "]x[" << c.window->nlo << ".." << c.window->nhi << "] cells="
         << c.window->cells;
    os << "\n";
    for (const auto& d : c.details) os << "    " << d << "\n";
  }
}

std::string Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j;
    j["suite"] = c.suite;
    j["relation"] = c.name;
    j["status"] = c.status;
    j["failing_cells"] = c.details;
    if (c.window) {
      j["safe_window"] = {{"mlo", c.window->mlo}, {"mhi", c.window->mhi},
                          {"nlo", c.window->nlo}, {"nhi", c.window->nhi},
                          {"cells", c.window->cells}};
    } else {
      j["safe_window"] = nullptr;
    }
    j["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

CheckResult make_pass(std::string suite, std::string name) {
  return CheckResult{std::move(suite), std::move(name), "pass", {}, {}, 0};
}

CheckResult make_fail(std::string suite, std::string name,
                      std::vector<std::string> details) {
  return CheckResult{std::move(suite), std::move(name), "fail",
                     std::move(details), {}, 0};
}

}  // namespace qaffine
