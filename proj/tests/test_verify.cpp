#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "littlewood/verify.hpp"

using namespace littlewood;

namespace {

void check_report(const VerificationReport& report) {
  CHECK(report.pass());
  CHECK(report.failed_count() == 0);
  CHECK(!report.checks.empty());
  for (const auto& c : report.checks) {
    CHECK(!c.id.empty());
    CHECK(!c.law.empty());
    // slack is signed: margin checks store the negated margin.
    CHECK(std::isfinite(c.slack));
    CHECK(std::isfinite(c.bound));
    CHECK(c.bound >= 0.0);
  }
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("suite registry") {
    CHECK(verify_suite_names() ==
          std::vector<std::string>{"field", "norms", "spectral", "asymptotics", "bounds"});
    CHECK(default_verify_orders() == std::vector<std::uint64_t>{5, 7, 8, 9});
    CHECK_THROWS_AS(run_suite("bogus", {}), std::invalid_argument);
  }

  TEST_CASE("field laws hold at the default orders") { check_report(run_suite("field", {})); }

  TEST_CASE("norm methods agree on random arrays") { check_report(verify_norms()); }

  TEST_CASE("quadruple sums stay within their ceilings") {
    check_report(verify_spectral({5, 8}));
  }

  TEST_CASE("limit formulas and finite floors") { check_report(verify_asymptotics()); }

  TEST_CASE("minimizer bounds and inequality chains") { check_report(verify_bounds()); }

  TEST_CASE("custom orders flow through the dispatcher") {
    const auto report = run_suite("spectral", {9});
    check_report(report);
  }
}
