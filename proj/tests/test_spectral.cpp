#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "littlewood/norms.hpp"
#include "littlewood/spectral.hpp"

using namespace littlewood;

TEST_SUITE("spectral") {
  TEST_CASE("gauss tables have the expected magnitudes") {
    const auto f = make_field(5, 1);
    const auto table = gauss_table_additive(*f, {1});
    REQUIRE(table.size() == 4);
    CHECK(std::abs(table[0] - std::complex<double>{-1.0, 0.0}) < 1e-12);
    for (int m = 1; m < 4; ++m) CHECK(std::abs(std::abs(table[m]) - std::sqrt(5.0)) < 1e-12);

    const auto mt = gauss_table_multiplicative(*f, quadratic_character(*f));
    REQUIRE(mt.size() == 5);
    CHECK(std::abs(mt[0]) < 1e-12);  // trivial additive component
    for (int y = 1; y < 5; ++y) CHECK(std::abs(std::abs(mt[y]) - std::sqrt(5.0)) < 1e-12);
  }

  TEST_CASE("additive quadruples at q=5 take their exact diagonal values") {
    const auto f = make_field(5, 1);
    const auto all = h_additive(*f, {1}, {0, 0, 0, 0});
    CHECK(all.m == 64.0);  // (q-1)^3
    CHECK(std::abs(all.h - std::complex<double>{76.0, 0.0}) < 1e-9);  // (q-2)q^2 + 1
    CHECK(all.slack == doctest::Approx(12.0).epsilon(1e-9));

    const auto pair = h_additive(*f, {1}, {0, 1, 0, 1});
    CHECK(pair.m == 64.0);
    CHECK(std::abs(pair.h - std::complex<double>{60.0, 0.0}) < 1e-9);  // (q-3)q^2 + 2q

    const auto crossed = h_additive(*f, {1}, {0, 1, 1, 0});
    CHECK(std::abs(crossed.h - std::complex<double>{60.0, 0.0}) < 1e-9);

    const auto off = h_additive(*f, {1}, {0, 1, 2, 3});
    CHECK(off.m == 0.0);
    CHECK(off.slack <= 4.0 * 5.0 * std::sqrt(5.0));
  }

  TEST_CASE("additive quadruple slack stays under the ceiling exhaustively") {
    for (std::uint32_t p : {5u, 7u}) {
      const auto f = make_field(p, 1);
      const auto table = gauss_table_additive(*f, {1});
      const std::uint64_t r = p - 1;
      const double bound = double(r) * p * std::sqrt(double(p));
      double worst = 0.0;
      for (std::uint64_t k = 0; k < r * r * r * r; ++k) {
        const std::array<std::uint64_t, 4> tuple{k % r, k / r % r, k / (r * r) % r,
                                                 k / (r * r * r)};
        const auto h = h_additive_from_table(table, p, tuple);
        worst = std::max(worst, h.slack);
      }
      // Some tuples attain the ceiling exactly; tolerate rounding there.
      CHECK(worst <= bound * (1.0 + 1e-12));
      CHECK(worst >= bound * (1.0 - 1e-9));
    }
  }

  TEST_CASE("multiplicative quadruples distinguish the quadratic diagonal") {
    const auto f = make_field(5, 1);
    const auto quad = quadratic_character(*f);
    const double bound = 3.0 * 25.0 * std::sqrt(5.0);

    const auto paired = h_multiplicative(*f, quad, {1, 2, 1, 2});
    CHECK(paired.m == 125.0);
    CHECK(paired.slack <= bound);

    // kappa = lambda, mu = nu with distinct values: main term only for
    // quadratic characters.
    const auto diag = h_multiplicative(*f, quad, {1, 1, 2, 2});
    CHECK(diag.m == 125.0);
    CHECK(diag.slack <= bound);

    const auto quartic = h_multiplicative(*f, {1}, {1, 1, 2, 2});
    CHECK(quartic.m == 0.0);
    CHECK(quartic.slack <= bound);

    const auto off = h_multiplicative(*f, quad, {1, 2, 3, 4});
    CHECK(off.m == 0.0);
  }

  TEST_CASE("quadruple sums reject degenerate input") {
    const auto f = make_field(5, 1);
    CHECK_THROWS_AS(h_additive(*f, {0}, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(h_multiplicative(*f, {0}, {1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(h_multiplicative(*f, {1}, {5, 0, 0, 0}), std::invalid_argument);
  }

  TEST_CASE("dual expansion matches autocorrelation for additive builds") {
    AdditivePolySpec spec;
    spec.field = make_field(5, 1);
    spec.s = 4;
    spec.t = 0;
    const auto direct = l4p4(build_additive(spec), NormMethod::autocorrelation);
    CHECK(l4_via_gauss_additive(spec) == doctest::Approx(direct).epsilon(1e-6));

    AdditivePolySpec oct;
    oct.field = make_field(2, 3);
    oct.s = 7;
    const auto a = build_additive(oct);
    CHECK(l4p4(a, NormMethod::autocorrelation) == 87.0);
    CHECK(l4_via_gauss_additive(oct) == doctest::Approx(87.0).epsilon(1e-6));

    AdditivePolySpec shifted = oct;
    shifted.s = 5;
    shifted.t = 3;
    const auto want = l4p4(build_additive(shifted), NormMethod::autocorrelation);
    CHECK(l4_via_gauss_additive(shifted) == doctest::Approx(want).epsilon(1e-6));
  }

  TEST_CASE("dual expansion matches autocorrelation for multiplicative builds") {
    MultiplicativePolySpec spec;
    spec.field = make_field(7, 1);
    spec.chi = quadratic_character(*spec.field);
    spec.box.sizes = {7};
    spec.t = {0};
    CHECK(l4_via_gauss_multiplicative(spec) == doctest::Approx(50.0).epsilon(1e-6));

    MultiplicativePolySpec two;
    two.field = make_field(3, 2);
    two.chi = quadratic_character(*two.field);
    two.box.sizes = {3, 2};
    two.t = {1, 0};
    const auto want = l4p4(build_multiplicative(two), NormMethod::autocorrelation);
    CHECK(l4_via_gauss_multiplicative(two) == doctest::Approx(want).epsilon(1e-6));

    MultiplicativePolySpec complex_char = spec;
    complex_char.chi = {1};
    const auto cwant = l4p4(build_multiplicative(complex_char), NormMethod::autocorrelation);
    CHECK(l4_via_gauss_multiplicative(complex_char) == doctest::Approx(cwant).epsilon(1e-6));
  }

  TEST_CASE("dual expansion is guarded to small orders") {
    MultiplicativePolySpec spec;
    spec.field = make_field(17, 1);
    spec.chi = quadratic_character(*spec.field);
    spec.box.sizes = {4};
    spec.t = {0};
    CHECK_THROWS_AS(l4_via_gauss_multiplicative(spec), std::invalid_argument);

    AdditivePolySpec add;
    add.field = make_field(5, 2);
    add.s = 6;
    CHECK_THROWS_AS(l4_via_gauss_additive(add), std::invalid_argument);
  }

  TEST_CASE("cyclic quadruple sum respects its ceiling") {
    const Segment u{-2, 6};
    const auto r = cyclic_quadruple_sum(5, u);
    CHECK(r.t > 0.0);
    CHECK(r.t <= r.bound);
    const double expect =
        64.0 * 5.0 * std::pow(std::max<double>(5.0, 6.0), 3) * std::pow(1.0 + std::log(5.0), 3);
    CHECK(r.bound == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(cyclic_quadruple_sum(9, u), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_quadruple_sum(5, Segment{0, 11}), std::invalid_argument);
  }

  TEST_CASE("cyclic interpolation identity on Z/5") {
    std::mt19937 rng(515151);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::complex<double>> values(5);
      for (auto& v : values) {
        const double angle = 2.0 * 3.14159265358979323846 * unif(rng);
        v = {std::cos(angle), std::sin(angle)};
      }
      const Segment u{static_cast<long long>(rng() % 7) - 3,
                      static_cast<std::uint32_t>(4 + rng() % 7)};
      const double direct = l4_cyclic_direct(5, values, u);
      const double interp = l4_cyclic_interpolation(5, values, u);
      CHECK(interp == doctest::Approx(direct).epsilon(1e-9));
    }
  }
}
