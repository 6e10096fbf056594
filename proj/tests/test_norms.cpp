#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "littlewood/charpoly.hpp"
#include "littlewood/norms.hpp"

using namespace littlewood;

namespace {

CoefficientArray fekete7() {
  MultiplicativePolySpec spec;
  spec.field = make_field(7, 1);
  spec.chi = quadratic_character(*spec.field);
  spec.box.sizes = {7};
  spec.t = {0};
  return build_multiplicative(spec);
}

}  // namespace

TEST_SUITE("norms") {
  TEST_CASE("method names round trip") {
    for (auto m : {NormMethod::oracle, NormMethod::autocorrelation, NormMethod::sampled_dft}) {
      CHECK(norm_method_from_name(norm_method_name(m)) == m);
    }
    CHECK(norm_method_from_name("sampled-dft") == NormMethod::sampled_dft);
    CHECK_THROWS_AS(norm_method_from_name("fft"), std::invalid_argument);
  }

  TEST_CASE("quadratic build over F_7 has the classical norms") {
    const auto a = fekete7();
    CHECK(l2_sq(a) == 6.0);
    CHECK(l4p4(a, NormMethod::oracle) == 50.0);
    CHECK(l4p4(a, NormMethod::autocorrelation) == 50.0);
    CHECK(std::abs(l4p4(a, NormMethod::sampled_dft) - 50.0) < 1e-9);
    const auto r = norm_report(a);
    CHECK(r.ratio4 == doctest::Approx(50.0 / 36.0).epsilon(1e-15));
    REQUIRE(r.merit_factor.has_value());
    CHECK(*r.merit_factor == doctest::Approx(18.0 / 7.0).epsilon(1e-15));
  }

  TEST_CASE("autocorrelation on a short exact array") {
    const auto a = CoefficientArray::exact(Box{{3}}, {1, 1, -1});
    CHECK(autocorrelation(a, {0}) == std::complex<double>{3.0, 0.0});
    CHECK(autocorrelation(a, {1}) == std::complex<double>{0.0, 0.0});
    CHECK(autocorrelation(a, {2}) == std::complex<double>{-1.0, 0.0});
    CHECK(autocorrelation(a, {-2}) == std::complex<double>{-1.0, 0.0});
    CHECK(autocorrelation(a, {3}) == std::complex<double>{0.0, 0.0});
    CHECK(l4p4(a, NormMethod::oracle) == 11.0);
    CHECK(l4p4(a, NormMethod::autocorrelation) == 11.0);
  }

  TEST_CASE("autocorrelation of a complex pair") {
    const auto a =
        CoefficientArray::complex_valued(Box{{2}}, {{0.0, 1.0}, {1.0, 0.0}});
    CHECK(std::abs(autocorrelation(a, {1}) - std::complex<double>{0.0, -1.0}) < 1e-15);
    CHECK(std::abs(l4p4(a, NormMethod::autocorrelation) - 6.0) < 1e-12);
    CHECK(std::abs(l4p4(a, NormMethod::oracle) - 6.0) < 1e-12);
    CHECK(std::abs(l4p4(a, NormMethod::sampled_dft) - 6.0) < 1e-9);
  }

  TEST_CASE("two-variable outer product of the F_7 build") {
    const auto f = fekete7();
    std::vector<std::int8_t> vals(49);
    for (int j1 = 0; j1 < 7; ++j1) {
      for (int j0 = 0; j0 < 7; ++j0) {
        vals[j0 + 7 * j1] = static_cast<std::int8_t>(f.exact_value(j0) * f.exact_value(j1));
      }
    }
    const auto a = CoefficientArray::exact(Box{{7, 7}}, std::move(vals));
    CHECK(l2_sq(a) == 36.0);
    CHECK(l4p4(a, NormMethod::oracle) == 2500.0);
    CHECK(l4p4(a, NormMethod::autocorrelation) == 2500.0);
    CHECK(std::abs(l4p4(a, NormMethod::sampled_dft) - 2500.0) < 1e-8);
  }

  TEST_CASE("merit factor is omitted at the flatness floor") {
    const auto a = CoefficientArray::exact(Box{{1}}, {1});
    const auto r = norm_report(a);
    CHECK(r.l4p4 == 1.0);
    CHECK(r.ratio4 == 1.0);
    CHECK_FALSE(r.merit_factor.has_value());
  }

  TEST_CASE("fft basics") {
    std::vector<std::complex<double>> a{1.0, 0.0, 0.0, 0.0};
    fft(a);
    for (const auto& v : a) CHECK(std::abs(v - std::complex<double>{1.0, 0.0}) < 1e-15);
    std::vector<std::complex<double>> b{1.0, 1.0, 1.0, 1.0};
    fft(b);
    CHECK(std::abs(b[0] - std::complex<double>{4.0, 0.0}) < 1e-15);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(b[k]) < 1e-15);
    std::vector<std::complex<double>> c(3, 0.0);
    CHECK_THROWS_AS(fft(c), std::invalid_argument);
  }

  TEST_CASE("grid mean square recovers the coefficient energy") {
    CHECK(std::abs(grid_mean_sq(fekete7()) - 6.0) < 1e-9);
  }

  TEST_CASE("default method switches to the sampled grid for large arrays") {
    CHECK(default_method(fekete7()) == NormMethod::autocorrelation);
    const auto big = CoefficientArray::exact(Box{{4097}}, std::vector<std::int8_t>(4097, 1));
    CHECK(default_method(big) == NormMethod::sampled_dft);
  }

  TEST_CASE("methods agree on random arrays") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
      const bool two_dim = trial % 2 == 0;
      std::vector<std::uint32_t> sizes;
      if (two_dim) {
        sizes = {static_cast<std::uint32_t>(2 + rng() % 5),
                 static_cast<std::uint32_t>(2 + rng() % 5)};
      } else {
        sizes = {static_cast<std::uint32_t>(2 + rng() % 29)};
      }
      Box box{sizes};
      std::vector<std::int8_t> vals(box.cardinality());
      for (auto& v : vals) v = static_cast<std::int8_t>(rng() % 3) - 1;
      const auto a = CoefficientArray::exact(box, std::move(vals));
      const double oracle = l4p4(a, NormMethod::oracle);
      CHECK(l4p4(a, NormMethod::autocorrelation) == doctest::Approx(oracle).epsilon(1e-12));
      CHECK(l4p4(a, NormMethod::sampled_dft) == doctest::Approx(oracle).epsilon(1e-9));
      CHECK(oracle >= l2_sq(a) * l2_sq(a) - 1e-9);  // L4 >= L2 on the torus
    }
  }

  TEST_CASE("oracle guard rejects oversized input") {
    const auto big =
        CoefficientArray::exact(Box{{100001}}, std::vector<std::int8_t>(100001, 1));
    CHECK_THROWS_AS(l4p4(big, NormMethod::oracle), std::invalid_argument);
  }
}
