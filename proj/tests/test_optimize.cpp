#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "littlewood/optimize.hpp"

using namespace littlewood;

namespace {

// Frozen minimizer table, dimensions 1..8.
constexpr double kNonquadX[8] = {1.115749396663, 1.072955273998, 1.046024478966,
                                 1.029205206886, 1.018688507427, 1.012061488280,
                                 1.007843181335, 1.005131574339};
constexpr double kNonquadV[8] = {1.2992161754, 1.5254981136, 1.6842027400, 1.7912774314,
                                 1.8622792887, 1.9090716452, 1.9398787773, 1.9601849107};
constexpr double kQuadX[8] = {1.057827906848, 1.062292972623, 1.053371335468,
                              1.041180217294, 1.029840757537, 1.020814573545,
                              1.014205542612, 1.009582607140};
constexpr double kQuadV[8] = {1.1576774311, 1.3385253817, 1.5064869014, 1.6461198875,
                              1.7533432596, 1.8312220750, 1.8857885594, 1.9232045894};

bool has_check(const VerificationReport& report, const std::string& prefix) {
  for (const auto& c : report.checks) {
    if (c.id.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("optimize") {
  TEST_CASE("objective values at unit size") {
    CHECK(theta(1, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(theta(2, 1.0) == doctest::Approx(14.0 / 9.0).epsilon(1e-15));
    CHECK(t_quad(1, 1.0) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
    CHECK(t_quad(2, 1.0) == doctest::Approx(49.0 / 36.0).epsilon(1e-15));
    CHECK(t_quad_rational(1, Rational(1)) == Rational(7, 6));
    CHECK(t_quad_rational(2, Rational(1)) == Rational(49, 36));
    for (auto [num, den] : {std::pair{51, 50}, {11, 10}, {7, 5}}) {
      CHECK(to_double(t_quad_rational(1, Rational(num, den))) ==
            doctest::Approx(t_quad(1, double(num) / den)).epsilon(1e-13));
    }
  }

  TEST_CASE("stationarity polynomials at pinned points") {
    CHECK(stationarity(1, CharKind::nonquadratic, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(stationarity(1, CharKind::nonquadratic, 1.2) ==
          doctest::Approx(1.2 * 1.2 * 1.2 - 12 * 1.2 + 12).epsilon(1e-12));
    CHECK(stationarity(1, CharKind::quadratic, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(stationarity(1, CharKind::quadratic, 1.06) < 0.0);
    CHECK(stationarity(1, CharKind::additive, 1.1) ==
          doctest::Approx(stationarity(1, CharKind::nonquadratic, 1.1)).epsilon(1e-15));
  }

  TEST_CASE("bracket intervals scale with dimension") {
    const auto n1 = stationarity_interval(1, CharKind::nonquadratic);
    CHECK(n1[0] == 1.0);
    CHECK(n1[1] == doctest::Approx(1.0 + 9.0 / 64.0).epsilon(1e-15));
    const auto q1 = stationarity_interval(1, CharKind::quadratic);
    CHECK(q1[1] == doctest::Approx(1.0 + 9.0 / 32.0).epsilon(1e-15));
    const auto n2 = stationarity_interval(2, CharKind::nonquadratic);
    CHECK(n2[1] == doctest::Approx(1.0 + 27.0 / 256.0).epsilon(1e-15));
    const auto q2 = stationarity_interval(2, CharKind::quadratic);
    CHECK(q2[1] == doctest::Approx(1.0 + 27.0 / 128.0).epsilon(1e-15));
  }

  TEST_CASE("minimizers match the frozen table") {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      const auto n = minimize(e, CharKind::nonquadratic);
      CHECK(n.x_star == doctest::Approx(kNonquadX[e - 1]).epsilon(1e-9));
      CHECK(n.value4 == doctest::Approx(kNonquadV[e - 1]).epsilon(1e-9));
      CHECK(n.residual < 1e-9);
      CHECK(std::isnan(n.tau_star));
      CHECK(n.interval_lo < n.x_star);
      CHECK(n.x_star < n.interval_hi);
      CHECK(theta(e, n.x_star) == doctest::Approx(n.value4).epsilon(1e-12));

      const auto q = minimize(e, CharKind::quadratic);
      CHECK(q.x_star == doctest::Approx(kQuadX[e - 1]).epsilon(1e-9));
      CHECK(q.value4 == doctest::Approx(kQuadV[e - 1]).epsilon(1e-9));
      CHECK(q.residual < 1e-9);
      CHECK(q.tau_star == doctest::Approx((1.0 - 2.0 * q.x_star) / 4.0).epsilon(1e-15));
      CHECK(t_quad(e, q.x_star) == doctest::Approx(q.value4).epsilon(1e-12));
    }
  }

  TEST_CASE("the quadratic minimum sits below the nonquadratic one") {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      CHECK(minimize(e, CharKind::quadratic).value4 <
            minimize(e, CharKind::nonquadratic).value4);
    }
  }

  TEST_CASE("additive minimization is one-dimensional and matches nonquadratic") {
    const auto a = minimize(1, CharKind::additive);
    const auto n = minimize(1, CharKind::nonquadratic);
    CHECK(a.x_star == n.x_star);
    CHECK(a.value4 == n.value4);
    CHECK_THROWS_AS(minimize(2, CharKind::additive), std::invalid_argument);
  }

  TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(minimize(9, CharKind::quadratic), std::invalid_argument);
    CHECK_THROWS_AS(minimize(0, CharKind::quadratic), std::invalid_argument);
  }

  TEST_CASE("exact bracket for the one-variable quadratic minimum") {
    const auto b = minimum_bracket(1);
    CHECK(b.certified);
    CHECK(b.triple[0] == Rational(55, 52));
    CHECK(b.triple[1] == Rational(128, 121));
    CHECK(b.triple[2] == Rational(73, 69));
    CHECK(b.lower == Rational(724676, 626175));
    CHECK(b.upper == Rational(13770323, 11894784));
    CHECK(b.outer_lo == Rational(103, 89));
    CHECK(b.outer_hi == Rational(22, 19));
    CHECK(b.lower < b.upper);
    CHECK(b.outer_lo < b.lower);
    CHECK(b.upper < b.outer_hi);
    const double v = minimize(1, CharKind::quadratic).value4;
    CHECK(to_double(b.lower) <= v);
    CHECK(v <= to_double(b.upper));
  }

  TEST_CASE("brackets certify through dimension five") {
    for (std::uint32_t e = 1; e <= 5; ++e) {
      const auto b = minimum_bracket(e);
      CHECK(b.certified);
      CHECK(b.lower < b.upper);
      const double v = minimize(e, CharKind::quadratic).value4;
      CHECK(to_double(b.lower) - 1e-12 <= v);
      CHECK(v <= to_double(b.upper) + 1e-12);
    }
    CHECK_THROWS_AS(minimum_bracket(6), std::invalid_argument);
    CHECK_THROWS_AS(minimum_bracket(0), std::invalid_argument);
  }

  TEST_CASE("inequality chains hold with exact crosschecks where available") {
    for (auto [e1, e2] : {std::pair<std::uint32_t, std::uint32_t>{1, 1}, {1, 2}, {2, 3}, {3, 3}}) {
      const auto report = inequality_chain_check(e1, e2);
      CHECK(report.pass());
      CHECK(report.failed_count() == 0);
    }
    CHECK(has_check(inequality_chain_check(1, 1), "submultiplicative-exact"));
    CHECK(has_check(inequality_chain_check(1, 1), "aux-cubic-positive"));
  }

  TEST_CASE("the one-variable quadratic minimum is a cubic root") {
    // 27 y^3 - 498 y^2 + 1164 y - 722 at y = 1 is negative: no root below.
    CHECK(27.0 - 498.0 + 1164.0 - 722.0 == -29.0);
    const auto report = cubic_root_crosscheck();
    CHECK(report.pass());
    CHECK(has_check(report, "minimum-is-cubic-root"));
    CHECK(has_check(report, "cubic-root@1.15767743"));
    CHECK(has_check(report, "cubic-root@1.45941055"));
    CHECK(has_check(report, "cubic-root@15.82735645"));
  }
}
