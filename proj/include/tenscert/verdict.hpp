#pragma once

#include <string>
#include <vector>

namespace tenscert {

/// One named claim checked by a verifier. Failing checks carry witnesses as
/// parseable polynomial strings where one exists.
struct Check {
  std::string claim;
  bool ok = true;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct Verdict {
  std::vector<Check> checks;
  /// Informational lines that do not affect the outcome.
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
  Check& add(std::string claim, bool ok, std::string detail = {},
             std::vector<std::string> witnesses = {}) {
    checks.push_back({std::move(claim), ok, std::move(detail), std::move(witnesses)});
    return checks.back();
  }
  void append(const Verdict& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace tenscert
