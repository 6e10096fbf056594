#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace littlewood {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// x^n for n >= 0.
inline Rational rat_pow(Rational x, unsigned n) {
  Rational acc{1};
  while (n != 0) {
    if (n & 1u) acc *= x;
    x *= x;
    n >>= 1u;
  }
  return acc;
}

inline BigInt int_pow(BigInt x, unsigned n) {
  BigInt acc{1};
  while (n != 0) {
    if (n & 1u) acc *= x;
    x *= x;
    n >>= 1u;
  }
  return acc;
}

}  // namespace littlewood
