#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "littlewood/charpoly.hpp"
#include "littlewood/rational.hpp"

namespace littlewood {

// omega(x, y) = sum_n max(0, 1 - |x n - y|)^2, for x != 0. Continuous, with
// omega(x,y) = omega(-x,y) = omega(x,-y) = omega(x,y+x).
double omega(double x, double y);

// phi(x) = omega(1/x, 0) for x > 0; phi(1) = 1.
double phi(double x);

// psi(x) = sum over odd m of max(0, 1 - |m|/(2x))^2 for x > 0; psi(1) = 1/2.
double psi(double x);

Rational phi_rational(const Rational& x);
Rational psi_rational(const Rational& x);

// Limiting value of ||f||_4^4 / ||f||_2^4 along the profile's family.
double limit_ratio4(const LimitProfile& profile);

// Closed-form pieces of the fourth-power norm of a character polynomial:
// ||f||_4^4 = A + B - D + E (nonquadratic) or A + B + C - 2D + E (quadratic),
// with |E| <= e_bound. A = B always; C is meaningful for quadratic chi only.
struct FiniteTerms {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
  double e_bound = 0.0;
  bool quadratic = false;
};

// For q <= 49 the closed forms are cross-checked against brute-force
// quadruple counts; a mismatch throws logic_error.
FiniteTerms finite_terms(const MultiplicativePolySpec& spec);
FiniteTerms finite_terms(const AdditivePolySpec& spec);

// Minimum of y -> omega(x, y) with its minimizer family: zero on the
// intervals [m|x|+1, (m+1)|x|-1] when |x| >= 2, else omega(x, x/2) on the
// half-offset lattice {x(m+1/2)}.
struct OmegaMinimum {
  double x = 0.0;
  double min_value = 0.0;
  bool interval_family = false;  // true for the |x| >= 2 case
  double representative = 0.0;   // one minimizing y
  std::string describe() const;
};

OmegaMinimum omega_y_minimum(double x);

// Finite-q lower bound on ratio4: sum_n |S ∩ (n(q-1)+S)|^2 / |S|^2 for the
// additive build, and sum_n |V ∩ (np+V)|^2 / |V|^2 with V the nonzero
// support for the multiplicative build.
double liminf_lower_bound(const AdditivePolySpec& spec);
double liminf_lower_bound(const MultiplicativePolySpec& spec);

}  // namespace littlewood
