#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "littlewood/asymptotics.hpp"
#include "littlewood/norms.hpp"

using namespace littlewood;

namespace {

LimitProfile profile(CharKind kind, std::vector<double> sigma, std::vector<double> tau = {}) {
  LimitProfile p;
  p.kind = kind;
  p.e = static_cast<std::uint32_t>(sigma.size());
  p.sigma = std::move(sigma);
  p.tau = std::move(tau);
  return p;
}

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("tent sum evaluates and respects its symmetries") {
    CHECK(omega(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(omega(1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(omega(0.5, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(omega(2.5, 1.5) == doctest::Approx(0.0).epsilon(1e-15));
    for (double x : {0.7, 1.3, 2.2}) {
      for (double y : {0.1, 0.4, 1.9}) {
        CHECK(omega(x, y) == doctest::Approx(omega(-x, y)).epsilon(1e-12));
        CHECK(omega(x, y) == doctest::Approx(omega(x, -y)).epsilon(1e-12));
        CHECK(omega(x, y) == doctest::Approx(omega(x, y + x)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("one-variable sections have known exact values") {
    CHECK(phi(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(phi(2.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(phi(55.0 / 52.0) == doctest::Approx(3043.0 / 3025.0).epsilon(1e-14));
    CHECK(psi(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(psi(1.5) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(psi(55.0 / 52.0) == doctest::Approx(1682.0 / 3025.0).epsilon(1e-14));
  }

  TEST_CASE("rational sections agree with the double versions") {
    CHECK(phi_rational(Rational(55, 52)) == Rational(3043, 3025));
    CHECK(psi_rational(Rational(55, 52)) == Rational(1682, 3025));
    CHECK(phi_rational(Rational(1)) == Rational(1));
    CHECK(psi_rational(Rational(1)) == Rational(1, 2));
    for (auto [num, den] : {std::pair{9, 8}, {13, 12}, {7, 5}}) {
      const Rational x(num, den);
      CHECK(to_double(phi_rational(x)) == doctest::Approx(phi(to_double(x))).epsilon(1e-14));
      CHECK(to_double(psi_rational(x)) == doctest::Approx(psi(to_double(x))).epsilon(1e-14));
    }
  }

  TEST_CASE("limit values of the canonical families") {
    CHECK(limit_ratio4(profile(CharKind::quadratic, {1.0}, {0.0})) ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(limit_ratio4(profile(CharKind::quadratic, {1.0}, {0.25})) ==
          doctest::Approx(7.0 / 6.0).epsilon(1e-14));
    CHECK(limit_ratio4(profile(CharKind::additive, {1.0})) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(limit_ratio4(profile(CharKind::nonquadratic, {1.0})) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(limit_ratio4(profile(CharKind::quadratic, {1.0, 1.0}, {0.0, 0.0})) ==
          doctest::Approx(19.0 / 9.0).epsilon(1e-14));
    // Translation enters with period sigma/2.
    CHECK(limit_ratio4(profile(CharKind::quadratic, {1.0}, {0.75})) ==
          doctest::Approx(7.0 / 6.0).epsilon(1e-12));
  }

  TEST_CASE("closed-form pieces for the full quadratic box over F_7") {
    MultiplicativePolySpec spec;
    spec.field = make_field(7, 1);
    spec.chi = quadratic_character(*spec.field);
    spec.box.sizes = {7};
    spec.t = {0};
    const auto terms = finite_terms(spec);
    CHECK(terms.quadratic);
    CHECK(terms.a == Rational(49));
    CHECK(terms.b == Rational(49));
    CHECK(terms.c == Rational(37));
    CHECK(terms.d == Rational(33));
    const double main =
        to_double(terms.a + terms.b + terms.c - Rational(2) * terms.d);
    const double l4 = l4p4(build_multiplicative(spec), NormMethod::autocorrelation);
    CHECK(std::abs(l4 - main) <= terms.e_bound);
  }

  TEST_CASE("closed-form pieces for an additive build over F_8") {
    AdditivePolySpec spec;
    spec.field = make_field(2, 3);
    spec.s = 11;
    spec.t = 2;
    const auto terms = finite_terms(spec);
    CHECK_FALSE(terms.quadratic);
    CHECK(terms.a == Rational(153));  // 11^2 + 2 * 4^2 with period 7
    CHECK(terms.b == terms.a);
    CHECK(terms.d == Rational(891, 7));
    const double main = to_double(terms.a + terms.b - terms.d);
    const double l4 = l4p4(build_additive(spec), NormMethod::autocorrelation);
    CHECK(std::abs(l4 - main) <= terms.e_bound);
  }

  TEST_CASE("closed forms self-verify across kinds and orders") {
    // finite_terms cross-checks every piece against brute-force counts for
    // q <= 49 and throws on mismatch; reaching the checks below means the
    // counts agreed.
    MultiplicativePolySpec quad;
    quad.field = make_field(3, 2);
    quad.chi = quadratic_character(*quad.field);
    quad.box.sizes = {4, 5};
    quad.t = {1, -2};
    CHECK(finite_terms(quad).quadratic);

    MultiplicativePolySpec nq;
    nq.field = make_field(5, 2);
    nq.chi = {1};
    nq.box.sizes = {7, 3};
    nq.t = {0, 2};
    const auto nqt = finite_terms(nq);
    CHECK_FALSE(nqt.quadratic);
    CHECK(nqt.c >= Rational(0));  // sum-count is reported even when unused

    AdditivePolySpec add;
    add.field = make_field(5, 1);
    add.s = 9;
    add.t = -1;
    CHECK(finite_terms(add).a > Rational(0));
  }

  TEST_CASE("translation minimum of the tent sum") {
    const auto wide = omega_y_minimum(2.5);
    CHECK(wide.interval_family);
    CHECK(wide.min_value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(omega(2.5, wide.representative) == doctest::Approx(0.0).epsilon(1e-12));

    const auto narrow = omega_y_minimum(1.0);
    CHECK_FALSE(narrow.interval_family);
    CHECK(narrow.min_value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(narrow.representative == doctest::Approx(0.5).epsilon(1e-12));

    const auto mid = omega_y_minimum(1.3);
    CHECK_FALSE(mid.interval_family);
    CHECK(mid.min_value == doctest::Approx(omega(1.3, 0.65)).epsilon(1e-12));
    for (double y = 0.0; y <= 1.3; y += 0.01) {
      CHECK(mid.min_value <= omega(1.3, y) + 1e-12);
    }
    CHECK_FALSE(omega_y_minimum(1.0).describe().empty());
  }

  TEST_CASE("finite-order floor for a long additive build") {
    AdditivePolySpec spec;
    spec.field = make_field(2, 3);
    spec.s = 14;  // exactly two periods
    spec.t = 0;
    CHECK(liminf_lower_bound(spec) == doctest::Approx(1.5).epsilon(1e-12));
    const auto r = norm_report(build_additive(spec));
    CHECK(r.ratio4 >= 1.5 - 1e-9);
  }

  TEST_CASE("finite-order floor for a long multiplicative build") {
    MultiplicativePolySpec spec;
    spec.field = make_field(5, 1);
    spec.chi = quadratic_character(*spec.field);
    spec.box.sizes = {10};
    spec.t = {0};
    // Support V drops j = 0 and j = 5; overlaps give (64 + 2*16)/64.
    CHECK(liminf_lower_bound(spec) == doctest::Approx(1.5).epsilon(1e-12));
    const auto r = norm_report(build_multiplicative(spec));
    CHECK(r.ratio4 >= 1.5 - 1e-9);
  }
}
