#pragma once

#include <string>
#include <vector>

namespace littlewood {

// One checked statement. `pass` is authoritative; `slack` is the measured
// quantity and `bound` the ceiling it was held against (0 when the check is
// a strict comparison whose margin is reported in `slack`).
struct VerificationCheck {
  std::string id;
  std::string law;
  bool pass = false;
  double slack = 0.0;
  double bound = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;

  void add(std::string id, std::string law, bool pass, double slack, double bound) {
    checks.push_back({std::move(id), std::move(law), pass, slack, bound});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  double max_slack() const {
    double m = 0.0;
    for (const auto& c : checks) m = c.slack > m ? c.slack : m;
    return m;
  }
};

}  // namespace littlewood
