#pragma once
// Pass/fail reports for law suites.  A failing check carries a
// machine-readable witness naming the violated law and the inputs.

#include <string>
#include <vector>

#include "json.hpp"

namespace dt {

struct Check {
  std::string law;
  bool ok = true;
  nlohmann::json witness;  // null when ok
  std::string note;        // e.g. "above exhaustive bound, sampled"
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  void pass(std::string law, std::string note = {}) {
    checks.push_back({std::move(law), true, nullptr, std::move(note)});
  }
  void fail_check(std::string law, nlohmann::json witness) {
    checks.push_back({std::move(law), false, std::move(witness), {}});
  }
  nlohmann::json to_json() const;
};

}  // namespace dt
