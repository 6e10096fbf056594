#pragma once

#include <array>
#include <cstdint>

#include "littlewood/charpoly.hpp"
#include "littlewood/rational.hpp"
#include "littlewood/report.hpp"

namespace littlewood {

// Double precision suffices up to dimension 8; the 2^(2e) scalings in the
// stationarity polynomials degrade beyond that.
inline constexpr std::uint32_t kMaxMinimizeDim = 8;

// Limit ratio4 of the equal-size families: Theta for nonquadratic/additive
// (sigma_j = x), T for quadratic (sigma_j = x, tau_j = (1-2x)/4).
double theta(std::uint32_t e, double x);
double t_quad(std::uint32_t e, double x);
Rational t_quad_rational(std::uint32_t e, const Rational& x);

// Derivative-based stationarity polynomial whose unique root in the bracket
// interval locates the minimum. For e=1 nonquadratic this is x^3 - 12x + 12.
double stationarity(std::uint32_t e, CharKind kind, double x);

// Bracket interval for the stationarity root: (1, 1 + 3^(e+1)/2^(2e+4)) for
// nonquadratic/additive, (1, 1 + 3^(e+1)/2^(2e+3)) for quadratic.
std::array<double, 2> stationarity_interval(std::uint32_t e, CharKind kind);

struct MinimizerResult {
  std::uint32_t e = 1;
  CharKind kind = CharKind::quadratic;
  double x_star = 0.0;
  double value4 = 0.0;  // minimal ratio4
  double tau_star = 0.0;  // (1 - 2 x_star)/4; NaN unless quadratic
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  double residual = 0.0;  // |stationarity(x_star)|
};

// Bisection on the stationarity polynomial; throws logic_error when the
// endpoint signs are not (+,-) since that signals a transcription defect.
// additive kind requires e = 1 and coincides with nonquadratic.
MinimizerResult minimize(std::uint32_t e, CharKind kind);

// Exact rational bracket for the quadratic minimum from a witness triple
// x1 < x2 < x3: upper = T(x2); lower = -(2^(e+1)/3^e) x3^e + 2 Phi(x1)^e
// + Psi(x1)^e, valid once T(x2) < min(T(x1), T(x3)). The result must land
// inside the coarser outer bracket it refines.
struct BracketResult {
  std::uint32_t e = 1;
  std::array<Rational, 3> triple;
  Rational lower;
  Rational upper;
  Rational outer_lo;
  Rational outer_hi;
  bool certified = false;
};

BracketResult minimum_bracket(std::uint32_t e);  // e in [1, 5]

// B_e4 < A_e4 and submultiplicativity B_(e1+e2)4 < B_e14 * B_e24, with
// exact-rational crosschecks from the brackets where available.
VerificationReport inequality_chain_check(std::uint32_t e1, std::uint32_t e2);

// The quadratic e=1 minimum is a root of 27y^3 - 498y^2 + 1164y - 722; also
// reports every real root of that cubic on (0, 20) by sign scanning.
VerificationReport cubic_root_crosscheck();

}  // namespace littlewood
