#include "littlewood/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "littlewood/asymptotics.hpp"

namespace littlewood {

namespace {

void check_dim(std::uint32_t e) {
  if (e < 1 || e > kMaxMinimizeDim) throw std::invalid_argument("dimension must be in [1, 8]");
}

// Nonquadratic/additive stationarity shares the quadratic's first two terms
// up to a factor 2 in the middle coefficient; the quadratic adds the
// (2x-1)-power tail.
double stationarity_value(std::uint32_t e, bool quadratic, double x) {
  const double pow3 = std::pow(3.0, static_cast<double>(e));
  const double mid = std::ldexp(pow3, quadratic ? 2 - static_cast<int>(e) : 3 - static_cast<int>(e));
  double value = std::pow(x, 3.0 * e) -
                 mid * (x - 1.0) * std::pow(3.0 * x * x - 4.0 * x + 2.0, static_cast<double>(e - 1));
  if (quadratic)
    value -= std::ldexp(pow3, -2 * static_cast<int>(e)) *
             std::pow(2.0 * x - 1.0, static_cast<double>(2 * e - 1));
  return value;
}

struct Triple {
  std::array<std::pair<long, long>, 3> x;
  std::pair<long, long> outer_lo, outer_hi;
};

// Witness triples and the coarser rational brackets they must refine.
constexpr Triple kTriples[5] = {
    {{{{55, 52}, {128, 121}, {73, 69}}}, {103, 89}, {22, 19}},
    {{{{18, 17}, {17, 16}, {16, 15}}}, {86, 65}, {75, 56}},
    {{{{21, 20}, {20, 19}, {19, 18}}}, {142, 95}, {116, 77}},
    {{{{26, 25}, {25, 24}, {24, 23}}}, {100, 61}, {107, 65}},
    {{{{36, 35}, {35, 34}, {34, 33}}}, {7, 4}, {128, 73}},
};

Rational make_rat(std::pair<long, long> pq) { return Rational(pq.first, pq.second); }

}  // namespace

double theta(std::uint32_t e, double x) {
  check_dim(e);
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  const double de = static_cast<double>(e);
  return -std::pow(2.0 * x / 3.0, de) + 2.0 * std::pow(phi(x), de);
}

double t_quad(std::uint32_t e, double x) {
  check_dim(e);
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  const double de = static_cast<double>(e);
  return -2.0 * std::pow(2.0 * x / 3.0, de) + 2.0 * std::pow(phi(x), de) +
         std::pow(psi(x), de);
}

Rational t_quad_rational(std::uint32_t e, const Rational& x) {
  check_dim(e);
  if (x <= 0) throw std::invalid_argument("x must be positive");
  return -2 * rat_pow(2 * x / 3, e) + 2 * rat_pow(phi_rational(x), e) +
         rat_pow(psi_rational(x), e);
}

double stationarity(std::uint32_t e, CharKind kind, double x) {
  check_dim(e);
  if (kind == CharKind::additive && e != 1)
    throw std::invalid_argument("additive families are univariate");
  return stationarity_value(e, kind == CharKind::quadratic, x);
}

std::array<double, 2> stationarity_interval(std::uint32_t e, CharKind kind) {
  check_dim(e);
  const int shift = kind == CharKind::quadratic ? 2 * static_cast<int>(e) + 3
                                                : 2 * static_cast<int>(e) + 4;
  return {1.0, 1.0 + std::ldexp(std::pow(3.0, static_cast<double>(e + 1)), -shift)};
}

MinimizerResult minimize(std::uint32_t e, CharKind kind) {
  check_dim(e);
  if (kind == CharKind::additive && e != 1)
    throw std::invalid_argument("additive families are univariate");
  const bool quadratic = kind == CharKind::quadratic;
  const auto interval = stationarity_interval(e, kind);
  auto f = [&](double x) { return stationarity_value(e, quadratic, x); };

  double lo = interval[0], hi = interval[1];
  if (!(f(lo) > 0.0) || !(f(hi) < 0.0))
    throw std::logic_error("endpoint signs violated; stationarity polynomial transcription defect");
  for (int it = 0; it < 90 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval collapsed to adjacent doubles
    (f(mid) > 0.0 ? lo : hi) = mid;
  }

  MinimizerResult out;
  out.e = e;
  out.kind = kind;
  out.x_star = 0.5 * (lo + hi);
  out.value4 = quadratic ? t_quad(e, out.x_star) : theta(e, out.x_star);
  out.tau_star = quadratic ? (1.0 - 2.0 * out.x_star) / 4.0
                           : std::numeric_limits<double>::quiet_NaN();
  out.interval_lo = interval[0];
  out.interval_hi = interval[1];
  out.residual = std::abs(f(out.x_star));
  return out;
}

BracketResult minimum_bracket(std::uint32_t e) {
  if (e < 1 || e > 5) throw std::invalid_argument("witness triples cover dimensions 1..5");
  const Triple& tr = kTriples[e - 1];

  BracketResult out;
  out.e = e;
  for (int i = 0; i < 3; ++i) out.triple[i] = make_rat(tr.x[i]);
  const Rational t1 = t_quad_rational(e, out.triple[0]);
  const Rational t2 = t_quad_rational(e, out.triple[1]);
  const Rational t3 = t_quad_rational(e, out.triple[2]);
  if (!(t2 < t1 && t2 < t3))
    throw std::logic_error("witness triple fails the midpoint condition");

  out.upper = t2;
  out.lower = -Rational(BigInt(1) << (e + 1), int_pow(3, e)) * rat_pow(out.triple[2], e) +
              2 * rat_pow(phi_rational(out.triple[0]), e) +
              rat_pow(psi_rational(out.triple[0]), e);
  out.outer_lo = make_rat(tr.outer_lo);
  out.outer_hi = make_rat(tr.outer_hi);
  if (!(out.lower < out.upper))
    throw std::logic_error("bracket degenerate: lower bound not below upper bound");
  if (!(out.outer_lo < out.lower && out.upper < out.outer_hi))
    throw std::logic_error("refined bracket escapes its outer bracket");
  out.certified = true;
  return out;
}

VerificationReport inequality_chain_check(std::uint32_t e1, std::uint32_t e2) {
  if (e1 < 1 || e2 < 1 || e1 + e2 > kMaxMinimizeDim)
    throw std::invalid_argument("dimensions must be positive with e1+e2 <= 8");
  VerificationReport report;
  report.suite = "inequality-chain";

  std::vector<std::uint32_t> dims{e1, e2, e1 + e2};
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  std::vector<MinimizerResult> quad, nonquad;
  for (std::uint32_t e : dims) {
    quad.push_back(minimize(e, CharKind::quadratic));
    nonquad.push_back(minimize(e, CharKind::nonquadratic));
  }
  auto b4 = [&](std::uint32_t e) {
    for (const auto& m : quad)
      if (m.e == e) return m.value4;
    throw std::logic_error("missing minimizer");
  };

  for (std::size_t i = 0; i < dims.size(); ++i) {
    const double margin = quad[i].value4 - nonquad[i].value4;
    report.add("quadratic-below-nonquadratic,e=" + std::to_string(dims[i]),
               "minimal quadratic ratio4 lies strictly below the nonquadratic one",
               margin < 0.0, margin, 0.0);
  }

  const double sub = b4(e1 + e2) - b4(e1) * b4(e2);
  report.add("submultiplicative,e1=" + std::to_string(e1) + ",e2=" + std::to_string(e2),
             "minimal ratio4 in dimension e1+e2 beats the product of the split minima",
             sub < 0.0, sub, 0.0);

  if (e1 <= 5 && e2 <= 5 && e1 + e2 <= 5) {
    // Exact-rational version: the outer bracket tops of the sum dimension sit
    // below the product of the outer bracket bottoms.
    const BracketResult bs = minimum_bracket(e1 + e2);
    const BracketResult b1 = minimum_bracket(e1);
    const BracketResult b2 = minimum_bracket(e2);
    const Rational gap = bs.outer_hi - b1.outer_lo * b2.outer_lo;
    report.add("submultiplicative-exact,e1=" + std::to_string(e1) + ",e2=" + std::to_string(e2),
               "interval arithmetic alone separates the sum minimum from the product",
               gap < 0, to_double(gap), 0.0);
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] > 5) continue;
    const BracketResult br = minimum_bracket(dims[i]);
    const bool inside = to_double(br.lower) <= quad[i].value4 && quad[i].value4 <= to_double(br.upper);
    report.add("minimum-within-bracket,e=" + std::to_string(dims[i]),
               "bisection minimum lies inside the certified rational bracket",
               inside, quad[i].value4 - to_double(br.upper), 0.0);
  }

  // Auxiliary cubic positivity used by the separation argument.
  double min_aux = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 1000; ++i) {
    const double x = 1.0 + 0.5 * i / 1000.0;
    const double v = ((4.0 * x - 12.0) * x + 12.0) * x - 3.0;
    min_aux = std::min(min_aux, v);
  }
  report.add("aux-cubic-positive", "4x^3-12x^2+12x-3 > 0 on [1, 3/2] (1001-point grid)",
             min_aux > 0.0, -min_aux, 0.0);
  return report;
}

VerificationReport cubic_root_crosscheck() {
  VerificationReport report;
  report.suite = "cubic-crosscheck";
  auto poly = [](double y) { return ((27.0 * y - 498.0) * y + 1164.0) * y - 722.0; };
  auto dpoly = [](double y) { return (81.0 * y - 996.0) * y + 1164.0; };

  const MinimizerResult b1 = minimize(1, CharKind::quadratic);
  const double y = b1.value4;
  const double residual = std::abs(poly(y)) / std::max(1.0, std::abs(dpoly(y)));
  report.add("minimum-is-cubic-root",
             "quadratic e=1 minimal ratio4 is a root of 27y^3-498y^2+1164y-722",
             residual < 1e-6, residual, 1e-6);

  const bool inside = 103.0 / 89.0 < y && y < 22.0 / 19.0;
  report.add("minimum-within-outer-bracket", "that root lies in (103/89, 22/19)", inside,
             y - 22.0 / 19.0, 0.0);

  // All real roots on (0, 20) by sign scanning; reported, not adjudicated.
  std::vector<double> roots;
  const int steps = 20000;
  double prev = poly(1e-9);
  for (int i = 1; i <= steps; ++i) {
    const double x = 20.0 * i / steps;
    const double cur = poly(x);
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = 20.0 * (i - 1) / steps, hi = x;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((poly(mid) < 0.0) == (poly(lo) < 0.0) ? lo : hi) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  for (double r : roots) {
    const double res = std::abs(poly(r)) / std::max(1.0, std::abs(dpoly(r)));
    char buf[64];
    std::snprintf(buf, sizeof buf, "cubic-root@%.9f", r);
    report.add(buf, "real root of the cubic on (0, 20), bisected from a sign change",
               res < 1e-9, res, 1e-9);
  }
  report.add("cubic-root-count", "the cubic has exactly three real roots on (0, 20)",
             roots.size() == 3, static_cast<double>(roots.size()), 3.0);
  return report;
}

}  // namespace littlewood
