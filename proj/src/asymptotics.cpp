#include "littlewood/asymptotics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "littlewood/norms.hpp"

namespace littlewood {

namespace {

constexpr long long kOmegaTermGuard = 100000000;

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

double omega(double x, double y) {
  if (x == 0.0) throw std::invalid_argument("omega requires x != 0");
  const double ax = std::abs(x);
  const long long lo = static_cast<long long>(std::floor((y - 1.0) / ax)) - 1;
  const long long hi = static_cast<long long>(std::ceil((y + 1.0) / ax)) + 1;
  if (hi - lo > kOmegaTermGuard) throw std::invalid_argument("omega term range too large");
  double total = 0.0;
  for (long long n = lo; n <= hi; ++n) {
    const double t = 1.0 - std::abs(ax * static_cast<double>(n) - y);
    if (t > 0.0) total += t * t;
  }
  return total;
}

double phi(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("phi requires x > 0");
  return omega(1.0 / x, 0.0);
}

double psi(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("psi requires x > 0");
  double total = 0.0;
  for (long long m = 1; static_cast<double>(m) < 2.0 * x; m += 2) {
    const double t = 1.0 - static_cast<double>(m) / (2.0 * x);
    total += 2.0 * t * t;
  }
  return total;
}

Rational phi_rational(const Rational& x) {
  if (!(x > 0)) throw std::invalid_argument("phi requires x > 0");
  const BigInt num = numerator(x), den = denominator(x);
  const BigInt n_max = (num - 1) / den;  // largest n with n < x
  Rational total{1};
  for (BigInt n = 1; n <= n_max; ++n) {
    const Rational t = 1 - Rational(n) / x;
    total += 2 * t * t;
  }
  return total;
}

Rational psi_rational(const Rational& x) {
  if (!(x > 0)) throw std::invalid_argument("psi requires x > 0");
  const BigInt num = numerator(x), den = denominator(x);
  const BigInt m_max = (2 * num - 1) / den;  // largest m with m < 2x
  Rational total{0};
  for (BigInt m = 1; m <= m_max; m += 2) {
    const Rational t = 1 - Rational(m) / (2 * x);
    total += 2 * t * t;
  }
  return total;
}

double limit_ratio4(const LimitProfile& profile) {
  profile.validate();
  const std::uint32_t e = profile.e;
  double size_prod = 1.0, phi_prod = 1.0;
  for (std::uint32_t k = 0; k < e; ++k) {
    size_prod *= profile.sigma[k];
    phi_prod *= omega(1.0 / profile.sigma[k], 0.0);
  }
  switch (profile.kind) {
    case CharKind::additive:
      return -2.0 / 3.0 * size_prod + 2.0 * phi_prod;
    case CharKind::nonquadratic:
      return -std::pow(2.0 / 3.0, e) * size_prod + 2.0 * phi_prod;
    case CharKind::quadratic: {
      double shifted_prod = 1.0;
      for (std::uint32_t k = 0; k < e; ++k) {
        shifted_prod *=
            omega(1.0 / profile.sigma[k], 1.0 + 2.0 * profile.tau[k] / profile.sigma[k]);
      }
      return -2.0 * std::pow(2.0 / 3.0, e) * size_prod + 2.0 * phi_prod + shifted_prod;
    }
  }
  throw std::logic_error("unknown kind");
}

namespace {

// Quadruple counts by explicit pair histograms; independent of the closed
// forms (no per-axis factorization is assumed).
struct PairCounts {
  BigInt diff_in_kernel;   // c - a = b - d, difference in ker alpha
  BigInt diff_all;         // c - a = b - d over the integers
  BigInt sum_in_kernel;    // a + b = c + d, sum in ker alpha
};

PairCounts count_quadruples(const std::vector<std::uint32_t>& sizes,
                            const std::vector<long long>& t, std::uint64_t period) {
  const std::uint32_t e = static_cast<std::uint32_t>(sizes.size());
  std::uint64_t n = 1;
  for (auto s : sizes) n *= s;
  std::vector<std::uint32_t> extents(e);
  std::uint64_t hist_size = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    extents[k] = 2 * sizes[k] - 1;
    hist_size *= extents[k];
  }
  std::vector<std::int64_t> diff_hist(hist_size, 0), sum_hist(hist_size, 0);
  std::vector<std::vector<std::uint32_t>> multi(n, std::vector<std::uint32_t>(e));
  {
    std::vector<std::uint32_t> j(e, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      multi[i] = j;
      for (std::uint32_t k = 0; k < e; ++k) {
        if (++j[k] < sizes[k]) break;
        j[k] = 0;
      }
    }
  }
  for (std::uint64_t ia = 0; ia < n; ++ia) {
    for (std::uint64_t ic = 0; ic < n; ++ic) {
      std::uint64_t fd = 0, fs = 0, mult = 1;
      for (std::uint32_t k = 0; k < e; ++k) {
        fd += static_cast<std::uint64_t>(static_cast<std::int64_t>(multi[ic][k]) -
                                         multi[ia][k] + sizes[k] - 1) *
              mult;
        fs += static_cast<std::uint64_t>(multi[ia][k] + multi[ic][k]) * mult;
        mult *= extents[k];
      }
      ++diff_hist[fd];
      ++sum_hist[fs];
    }
  }
  PairCounts out{0, 0, 0};
  std::vector<std::uint32_t> v(e, 0);
  for (std::uint64_t i = 0; i < hist_size; ++i) {
    bool diff_kernel = true, sum_kernel = true;
    for (std::uint32_t k = 0; k < e; ++k) {
      const long long dv = static_cast<long long>(v[k]) - (sizes[k] - 1);
      if (dv % static_cast<long long>(period) != 0) diff_kernel = false;
      // Sums of translated indices: (a_k + t_k) + (b_k + t_k) = v_k + 2 t_k.
      const long long sv = static_cast<long long>(v[k]) + 2 * t[k];
      if (((sv % static_cast<long long>(period)) + static_cast<long long>(period)) %
              static_cast<long long>(period) !=
          0) {
        sum_kernel = false;
      }
    }
    const BigInt d2 = BigInt(diff_hist[i]) * diff_hist[i];
    out.diff_all += d2;
    if (diff_kernel) out.diff_in_kernel += d2;
    if (sum_kernel) out.sum_in_kernel += BigInt(sum_hist[i]) * sum_hist[i];
    for (std::uint32_t k = 0; k < e; ++k) {
      if (++v[k] < extents[k]) break;
      v[k] = 0;
    }
  }
  return out;
}

BigInt axis_diff_sum(std::uint64_t s, std::uint64_t period) {
  BigInt total = BigInt(s) * s;
  for (std::uint64_t step = period; step < s; step += period) {
    total += 2 * BigInt(s - step) * (s - step);
  }
  return total;
}

BigInt axis_sum_kernel(std::uint64_t s, long long t, std::uint64_t period) {
  // sum over n of max(0, s - |period*n - (s + 2t - 1)|)^2
  const long long w = static_cast<long long>(s) + 2 * t - 1;
  const long long pp = static_cast<long long>(period);
  const long long n_lo = floor_div(w - static_cast<long long>(s), pp) - 1;
  const long long n_hi = floor_div(w + static_cast<long long>(s), pp) + 1;
  BigInt total = 0;
  for (long long n = n_lo; n <= n_hi; ++n) {
    const long long term = static_cast<long long>(s) - std::llabs(pp * n - w);
    if (term > 0) total += BigInt(term) * term;
  }
  return total;
}

}  // namespace

FiniteTerms finite_terms(const MultiplicativePolySpec& spec) {
  spec.validate();
  const FieldSpec& f = *spec.field;
  const std::uint32_t p = f.p();
  const std::uint32_t e = f.e();
  FiniteTerms out;
  out.quadratic = is_quadratic(f, spec.chi);
  Rational a{1}, c{1}, d{1};
  double size_factor = 1.0;
  for (std::uint32_t k = 0; k < e; ++k) {
    const std::uint64_t s = spec.box.sizes[k];
    a *= Rational(axis_diff_sum(s, p));
    c *= Rational(axis_sum_kernel(s, spec.t[k], p));
    d *= Rational(BigInt(2) * s * s * s + s) / Rational(3 * BigInt(p));
    size_factor *= std::pow(std::max(1.0, static_cast<double>(s) / p), 3);
  }
  out.a = a;
  out.b = a;
  out.c = c;
  out.d = d;
  const double q = static_cast<double>(f.q());
  out.e_bound = 3.0 * std::pow(64.0, e) * q * std::sqrt(q) * size_factor *
                std::pow(1.0 + std::log(static_cast<double>(p)), 3.0 * e);

  if (f.q() <= 49 && spec.box.cardinality() <= 4096) {
    const auto counts = count_quadruples(spec.box.sizes, spec.t, p);
    if (counts.diff_in_kernel != numerator(out.a) || denominator(out.a) != 1 ||
        Rational(counts.diff_all) != Rational(f.q()) * out.d ||
        counts.sum_in_kernel != numerator(out.c) || denominator(out.c) != 1) {
      throw std::logic_error("finite-term closed form disagrees with direct count");
    }
  }
  return out;
}

FiniteTerms finite_terms(const AdditivePolySpec& spec) {
  spec.validate();
  const std::uint64_t q = spec.field->q();
  const std::uint64_t r = q - 1;
  FiniteTerms out;
  out.quadratic = false;
  out.a = Rational(axis_diff_sum(spec.s, r));
  out.b = out.a;
  out.c = Rational(0);
  out.d = Rational(BigInt(2) * spec.s * spec.s * spec.s + spec.s) / Rational(3 * BigInt(r));
  const double qd = static_cast<double>(q);
  out.e_bound = 64.0 * qd * std::sqrt(qd) *
                std::pow(std::max(1.0, static_cast<double>(spec.s) / static_cast<double>(r)), 3) *
                std::pow(1.0 + std::log(static_cast<double>(r)), 3);
  if (q <= 49 && spec.s <= 4096) {
    const auto counts = count_quadruples({spec.s}, {spec.t}, r);
    if (counts.diff_in_kernel != numerator(out.a) ||
        Rational(counts.diff_all) != Rational(r) * out.d) {
      throw std::logic_error("finite-term closed form disagrees with direct count");
    }
  }
  return out;
}

std::string OmegaMinimum::describe() const {
  if (interval_family) {
    return "zero on [m|x|+1, (m+1)|x|-1] for every integer m";
  }
  return "minimum at y = x(m+1/2) for every integer m";
}

OmegaMinimum omega_y_minimum(double x) {
  if (x == 0.0) throw std::invalid_argument("omega_y_minimum requires x != 0");
  const double ax = std::abs(x);
  OmegaMinimum out;
  out.x = x;
  if (ax >= 2.0) {
    out.min_value = 0.0;
    out.interval_family = true;
    out.representative = 1.0;  // left end of the m=0 interval
  } else {
    out.min_value = omega(ax, ax / 2.0);
    out.interval_family = false;
    out.representative = ax / 2.0;
  }
  return out;
}

double liminf_lower_bound(const AdditivePolySpec& spec) {
  spec.validate();
  const std::uint64_t r = spec.field->q() - 1;
  const BigInt total = axis_diff_sum(spec.s, r);
  return Rational(total, BigInt(spec.s) * spec.s).convert_to<double>();
}

double liminf_lower_bound(const MultiplicativePolySpec& spec) {
  spec.validate();
  const FieldSpec& f = *spec.field;
  const std::uint32_t p = f.p();
  const std::uint32_t e = f.e();
  const std::uint64_t v_size = spec.box.cardinality() - kernel_intersection_count(spec);
  if (v_size == 0) return 0.0;
  // Per axis, overlap intervals of the box with its p*n translate, and the
  // kernel-congruence hits inside each overlap.
  std::vector<long long> n(e);
  std::vector<long long> n_max(e);
  for (std::uint32_t k = 0; k < e; ++k) {
    n_max[k] = (static_cast<long long>(spec.box.sizes[k]) - 1) / p;
    n[k] = -n_max[k];
  }
  BigInt total = 0;
  for (;;) {
    BigInt overlap = 1, kernel_hits = 1;
    for (std::uint32_t k = 0; k < e; ++k) {
      const long long s = spec.box.sizes[k];
      const long long shift = n[k] * static_cast<long long>(p);
      const long long len = s - std::llabs(shift);
      const long long start = std::max<long long>(0, shift);
      overlap *= len;
      long long r0 = (-spec.t[k]) % p;
      if (r0 < 0) r0 += p;
      // j in [start, start+len) with j ≡ r0 (mod p)
      long long first = start + ((r0 - start) % p + p) % p;
      const long long hits = first < start + len ? (start + len - 1 - first) / p + 1 : 0;
      kernel_hits *= hits;
    }
    total += (overlap - kernel_hits) * (overlap - kernel_hits);
    std::uint32_t k = 0;
    for (; k < e; ++k) {
      if (++n[k] <= n_max[k]) break;
      n[k] = -n_max[k];
    }
    if (k == e) break;
  }
  return Rational(total, BigInt(v_size) * v_size).convert_to<double>();
}

}  // namespace littlewood
