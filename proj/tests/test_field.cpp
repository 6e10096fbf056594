#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "littlewood/field.hpp"

using namespace littlewood;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("field") {
  TEST_CASE("primality and factorization") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(1001));  // 7 * 11 * 13
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_factors(7) == std::vector<std::uint64_t>{7});
    CHECK(prime_factors(1).empty());
  }

  TEST_CASE("unit roots are exact at quarter points") {
    const auto r = unit_roots(4);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == std::complex<double>{1.0, 0.0});
    CHECK(r[1] == std::complex<double>{0.0, 1.0});
    CHECK(r[2] == std::complex<double>{-1.0, 0.0});
    CHECK(r[3] == std::complex<double>{0.0, -1.0});
    const auto r5 = unit_roots(5);
    CHECK(r5[1].real() == doctest::Approx(std::cos(2 * kPi / 5)).epsilon(1e-15));
    CHECK(r5[1].imag() == doctest::Approx(std::sin(2 * kPi / 5)).epsilon(1e-15));
  }

  TEST_CASE("prime field layout") {
    const auto f = make_field(7, 1);
    CHECK(f->q() == 7);
    CHECK(f->modulus() == std::vector<std::uint32_t>{0, 1});  // modulus x for e=1
    CHECK(f->generator() == 3);                               // smallest primitive root mod 7
    CHECK(f->add(5, 4) == 2);
    CHECK(f->mul(5, 4) == 6);
    CHECK(f->pow_g(1) == 3);
    CHECK(f->pow_g(-1) == 5);  // 3 * 5 = 15 = 1 mod 7
    CHECK(f->dlog(3) == 1);
    CHECK(f->dlog(1) == 0);
    CHECK(f->trace(4) == 4);  // trace is the identity on prime fields
  }

  TEST_CASE("binary cubic extension") {
    const auto f = make_field(2, 3);
    CHECK(f->q() == 8);
    // First irreducible monic cubic in base-2 encoding order: x^3 + x + 1.
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(f->generator() == 2);  // the element x is primitive
    // For this modulus the trace of an element is its constant coordinate.
    for (std::uint32_t i = 0; i < 8; ++i) CHECK(f->trace(i) == i % 2);
    // x^3 = x + 1: index 2 cubed is 2 ^ 1 = 3.
    CHECK(f->mul(f->mul(2, 2), 2) == 3);
  }

  TEST_CASE("ternary quadratic extension") {
    const auto f = make_field(3, 2);
    CHECK(f->q() == 9);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(f->generator() == 4);                                  // 1 + x
    CHECK(f->dlog(4) == 1);
    // (1+x)^4 = -1 = 2 since x^2 = -1.
    CHECK(f->pow(4, 4) == 2);
    CHECK(f->dlog(2) == 4);
    // Tr(x) = x + x^3 = x - x = 0; Tr(1) = 2.
    CHECK(f->trace(3) == 0);
    CHECK(f->trace(1) == 2);
    CHECK(f->coords(7) == std::vector<std::uint32_t>{1, 2});
    CHECK(f->element({1, 2}) == 7);
  }

  TEST_CASE("first irreducible quadratic over F_2") {
    const auto f = make_field(2, 2);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
    CHECK(f->generator() == 2);
  }

  TEST_CASE("large binary extension") {
    const auto f = make_field(2, 10);
    CHECK(f->q() == 1024);
    // x^10 + x^3 + 1 precedes every other irreducible monic in encoding order.
    std::vector<std::uint32_t> expected(11, 0);
    expected[0] = expected[3] = expected[10] = 1;
    CHECK(f->modulus() == expected);
    // Generator order is exactly q - 1 = 3 * 11 * 31.
    CHECK(f->pow(f->generator(), 1023) == 1);
    for (std::uint64_t d : {3ull, 11ull, 31ull}) CHECK(f->pow(f->generator(), 1023 / d) != 1);
  }

  TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(make_field(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 27), std::invalid_argument);  // exceeds table cap
  }

  TEST_CASE("arithmetic laws on F_49") {
    const auto f = make_field(7, 2);
    for (std::uint32_t a = 0; a < 49; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->sub(a, a) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inverse(a)) == 1);
        CHECK(f->pow(a, 48) == 1);
        CHECK(f->pow_g(f->dlog(a)) == a);
      }
    }
    for (std::uint32_t k = 0; k < 48; ++k) CHECK(f->dlog(f->pow_g(k)) == k);
    // Generator minimality: no smaller element has full order.
    for (std::uint32_t a = 1; a < f->generator(); ++a) {
      bool primitive = true;
      for (std::uint64_t d : {2ull, 3ull}) {  // 48 = 2^4 * 3
        if (f->pow(a, 48 / d) == 1) primitive = false;
      }
      CHECK_FALSE(primitive);
    }
  }

  TEST_CASE("additive characters") {
    const auto f5 = make_field(5, 1);
    const auto v = eval_additive_char(*f5, {1}, 1);
    CHECK(v.real() == doctest::Approx(std::cos(2 * kPi / 5)).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(std::sin(2 * kPi / 5)).epsilon(1e-15));
    CHECK(eval_additive_char(*f5, {0}, 3) == std::complex<double>{1.0, 0.0});
    std::complex<double> sum = 0;
    for (std::uint32_t x = 0; x < 5; ++x) sum += eval_additive_char(*f5, {2}, x);
    CHECK(std::abs(sum) < 1e-12);

    const auto f8 = make_field(2, 3);
    for (std::uint32_t x = 0; x < 8; ++x) {
      const double want = f8->trace(x) ? -1.0 : 1.0;
      CHECK(eval_additive_char(*f8, {1}, x) == std::complex<double>{want, 0.0});
    }
  }

  TEST_CASE("multiplicative characters") {
    const auto f7 = make_field(7, 1);
    CHECK(character_order(*f7, {1}) == 6);
    CHECK(character_order(*f7, {2}) == 3);
    CHECK(character_order(*f7, {3}) == 2);
    CHECK(is_quadratic(*f7, {3}));
    CHECK_FALSE(is_quadratic(*f7, {1}));
    CHECK(quadratic_character(*f7).d == 3);
    // Legendre values mod 7: squares {1,2,4} map to +1.
    const int want[7] = {0, 1, 1, -1, 1, -1, -1};
    for (std::uint32_t x = 0; x < 7; ++x) {
      CHECK(quadratic_char_value(*f7, x) == want[x]);
      if (x) {
        const auto v = eval_multiplicative_char(*f7, {3}, x);
        CHECK(v == std::complex<double>{static_cast<double>(want[x]), 0.0});
      }
    }
    CHECK(eval_multiplicative_char(*f7, {3}, 0) == std::complex<double>{0.0, 0.0});
    CHECK_THROWS_AS(eval_multiplicative_char(*f7, {0}, 0), std::invalid_argument);

    const auto f8 = make_field(2, 3);
    CHECK_FALSE(is_quadratic(*f8, {3}));  // q even: no quadratic character
    CHECK_THROWS_AS(quadratic_character(*f8), std::invalid_argument);
  }

  TEST_CASE("gauss sums take the classical values") {
    // q = 1 mod 4: +sqrt(q); q = 3 mod 4: +i sqrt(q), for the quadratic pair.
    for (std::uint32_t p : {5u, 13u}) {
      const auto f = make_field(p, 1);
      const auto g = gauss_sum(*f, {1}, quadratic_character(*f));
      CHECK(g.real() == doctest::Approx(std::sqrt(double(p))).epsilon(1e-12));
      CHECK(std::abs(g.imag()) < 1e-9);
    }
    for (std::uint32_t p : {7u, 11u}) {
      const auto f = make_field(p, 1);
      const auto g = gauss_sum(*f, {1}, quadratic_character(*f));
      CHECK(std::abs(g.real()) < 1e-9);
      CHECK(g.imag() == doctest::Approx(std::sqrt(double(p))).epsilon(1e-12));
    }
  }

  TEST_CASE("degenerate gauss sums") {
    const auto f = make_field(3, 2);  // F_9
    CHECK(std::abs(gauss_sum(*f, {0}, {0}) - std::complex<double>{8.0, 0.0}) < 1e-12);
    CHECK(std::abs(gauss_sum(*f, {1}, {0}) - std::complex<double>{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(gauss_sum(*f, {0}, {1})) < 1e-12);
    CHECK(std::abs(std::abs(gauss_sum(*f, {1}, {4})) - 3.0) < 1e-12);
  }
}
