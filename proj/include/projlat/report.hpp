#pragma once

#include <string>
#include <type_traits>
#include <vector>

namespace projlat {

/// Outcome of a verification procedure: how many checks ran and which of
/// them failed, each with a readable reason.
struct Report {
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }

  /// As above, but the description is only built when the check fails.
  template <class Describe>
    requires std::is_invocable_r_v<std::string, Describe>
  void check(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) failures.push_back(describe());
  }

  void merge(const Report& other) {
    checks += other.checks;
    for (const auto& f : other.failures) failures.push_back(other.title + ": " + f);
  }

  std::string summary() const {
    std::string s = title + ": " + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(checks) + " checks";
    if (!passed()) s += ", " + std::to_string(failures.size()) + " failed";
    return s + ")";
  }
};

}  // namespace projlat
