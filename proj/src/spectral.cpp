#include "littlewood/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace littlewood {

namespace {

constexpr std::uint64_t kGaussL4OrderCap = 16;

std::uint64_t reduce_mod(long long v, std::uint64_t n) {
  long long r = v % static_cast<long long>(n);
  if (r < 0) r += static_cast<long long>(n);
  return static_cast<std::uint64_t>(r);
}

bool multiset_pair_equal(std::uint64_t a1, std::uint64_t a2, std::uint64_t b1, std::uint64_t b2) {
  return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

HQuadruple finish(std::array<std::uint64_t, 4> chars, std::complex<double> h, double m) {
  HQuadruple out;
  out.chars = chars;
  out.h = h;
  out.m = m;
  out.slack = std::abs(h - std::complex<double>(m, 0.0));
  return out;
}

}  // namespace

std::vector<std::complex<double>> gauss_table_additive(const FieldSpec& f,
                                                       const AdditiveCharacterId& psi) {
  const std::uint64_t r = f.q() - 1;
  std::vector<std::complex<double>> table(r);
  for (std::uint64_t m = 0; m < r; ++m) table[m] = gauss_sum(f, psi, MultiplicativeCharacterId{m});
  return table;
}

std::vector<std::complex<double>> gauss_table_multiplicative(const FieldSpec& f,
                                                             const MultiplicativeCharacterId& chi) {
  std::vector<std::complex<double>> table(f.q());
  for (std::uint64_t y = 0; y < f.q(); ++y)
    table[y] = gauss_sum(f, AdditiveCharacterId{static_cast<std::uint32_t>(y)}, chi);
  return table;
}

HQuadruple h_additive_from_table(const std::vector<std::complex<double>>& table, std::uint64_t q,
                                 const std::array<std::uint64_t, 4>& chars) {
  const std::uint64_t r = q - 1;
  if (table.size() != r) throw std::invalid_argument("table size must be q - 1");
  std::array<std::uint64_t, 4> c{};
  for (int i = 0; i < 4; ++i) c[i] = chars[i] % r;
  std::complex<double> h = 0.0;
  for (std::uint64_t x = 0; x < r; ++x) {
    auto at = [&](std::uint64_t k) { return table[(x + k) % r]; };
    h += at(c[0]) * at(c[1]) * std::conj(at(c[2]) * at(c[3]));
  }
  const double rd = static_cast<double>(r);
  const double m = multiset_pair_equal(c[0], c[1], c[2], c[3]) ? rd * rd * rd : 0.0;
  return finish(c, h, m);
}

HQuadruple h_additive(const FieldSpec& f, const AdditiveCharacterId& psi,
                      const std::array<std::uint64_t, 4>& chars) {
  if (psi.trivial()) throw std::invalid_argument("additive character must be nontrivial");
  return h_additive_from_table(gauss_table_additive(f, psi), f.q(), chars);
}

HQuadruple h_multiplicative_from_table(const FieldSpec& f,
                                       const std::vector<std::complex<double>>& table,
                                       bool chi_quadratic,
                                       const std::array<std::uint64_t, 4>& chars) {
  const std::uint64_t q = f.q();
  if (table.size() != q) throw std::invalid_argument("table size must be q");
  std::array<std::uint64_t, 4> c = chars;
  for (std::uint64_t v : c)
    if (v >= q) throw std::invalid_argument("character element out of range");
  std::complex<double> h = 0.0;
  for (std::uint64_t x = 0; x < q; ++x) {
    auto at = [&](std::uint64_t k) {
      return table[f.add(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(k))];
    };
    h += at(c[0]) * at(c[1]) * std::conj(at(c[2]) * at(c[3]));
  }
  const double qd = static_cast<double>(q);
  const bool main = multiset_pair_equal(c[0], c[1], c[2], c[3]) ||
                    (chi_quadratic && c[0] == c[1] && c[2] == c[3]);
  return finish(c, h, main ? qd * qd * qd : 0.0);
}

HQuadruple h_multiplicative(const FieldSpec& f, const MultiplicativeCharacterId& chi,
                            const std::array<std::uint64_t, 4>& chars) {
  if (chi.d % (f.q() - 1) == 0)
    throw std::invalid_argument("multiplicative character must be nontrivial");
  return h_multiplicative_from_table(f, gauss_table_multiplicative(f, chi), is_quadratic(f, chi),
                                     chars);
}

double l4_via_gauss_additive(const AdditivePolySpec& spec) {
  spec.validate();
  const FieldSpec& f = *spec.field;
  if (f.q() > kGaussL4OrderCap) throw std::invalid_argument("order too large for dual expansion");
  const std::uint64_t r = f.q() - 1;
  const std::uint32_t s = spec.s;

  const auto g = gauss_table_additive(f, spec.psi);
  const auto roots = unit_roots(static_cast<std::uint32_t>(r));
  const std::uint64_t t0 = reduce_mod(spec.t, r);

  // w[m][j] = chi_m at the j-th coefficient position g^(j+t).
  std::vector<std::vector<std::complex<double>>> w(r);
  for (std::uint64_t m = 0; m < r; ++m) {
    w[m].resize(s);
    for (std::uint32_t j = 0; j < s; ++j) w[m][j] = roots[(m * (t0 + j)) % r];
  }

  // p[m1*r+m2][v] = sum over a+b = v of chi_m1(pos a) chi_m2(pos b).
  const std::uint32_t nv = 2 * s - 1;
  std::vector<std::vector<std::complex<double>>> pair(r * r);
  for (std::uint64_t m1 = 0; m1 < r; ++m1)
    for (std::uint64_t m2 = 0; m2 < r; ++m2) {
      auto& row = pair[m1 * r + m2];
      row.assign(nv, 0.0);
      for (std::uint32_t a = 0; a < s; ++a)
        for (std::uint32_t b = 0; b < s; ++b) row[a + b] += w[m1][a] * w[m2][b];
    }

  std::complex<double> acc = 0.0;
  for (std::uint64_t k = 0; k < r; ++k)
    for (std::uint64_t l = 0; l < r; ++l)
      for (std::uint64_t mu = 0; mu < r; ++mu)
        for (std::uint64_t nu = 0; nu < r; ++nu) {
          std::complex<double> h = 0.0;
          for (std::uint64_t x = 0; x < r; ++x)
            h += g[(x + k) % r] * g[(x + l) % r] * std::conj(g[(x + mu) % r] * g[(x + nu) % r]);
          std::complex<double> xsum = 0.0;
          const auto& pl = pair[k * r + l];
          const auto& pr = pair[mu * r + nu];
          for (std::uint32_t v = 0; v < nv; ++v) xsum += std::conj(pl[v]) * pr[v];
          acc += h * xsum;
        }
  const double scale = std::pow(static_cast<double>(r), 5.0);
  return acc.real() / scale;
}

double l4_via_gauss_multiplicative(const MultiplicativePolySpec& spec) {
  spec.validate();
  const FieldSpec& f = *spec.field;
  const std::uint64_t q = f.q();
  if (q > kGaussL4OrderCap) throw std::invalid_argument("order too large for dual expansion");
  const std::uint32_t e = spec.box.dim();
  const std::uint64_t n = spec.box.cardinality();

  const auto g = gauss_table_multiplicative(f, spec.chi);
  const auto roots = unit_roots(f.p());

  // Flat enumeration of the box with, per position, the arranged element and
  // the flat index of its image in the difference box of extents 2s_k - 1.
  std::vector<std::uint32_t> elem(n);
  std::vector<std::uint64_t> vindex(n);
  std::uint64_t nv = 1;
  for (std::uint32_t k = 0; k < e; ++k) nv *= 2 * spec.box.sizes[k] - 1;
  {
    std::vector<std::uint32_t> j(e, 0);
    for (std::uint64_t flat = 0; flat < n; ++flat) {
      elem[flat] = spec.arrangement(j);
      std::uint64_t vi = 0, stride = 1;
      for (std::uint32_t k = 0; k < e; ++k) {
        vi += j[k] * stride;
        stride *= 2 * spec.box.sizes[k] - 1;
      }
      vindex[flat] = vi;
      for (std::uint32_t k = 0; k < e; ++k) {
        if (++j[k] < spec.box.sizes[k]) break;
        j[k] = 0;
      }
    }
  }

  // chr[y][flat] = psi_y at the arranged element of the position.
  std::vector<std::vector<std::complex<double>>> chr(q);
  for (std::uint64_t y = 0; y < q; ++y) {
    chr[y].resize(n);
    for (std::uint64_t flat = 0; flat < n; ++flat)
      chr[y][flat] = roots[f.trace(f.mul(static_cast<std::uint32_t>(y), elem[flat]))];
  }

  std::vector<std::vector<std::complex<double>>> pair(q * q);
  for (std::uint64_t y1 = 0; y1 < q; ++y1)
    for (std::uint64_t y2 = 0; y2 < q; ++y2) {
      auto& row = pair[y1 * q + y2];
      row.assign(nv, 0.0);
      for (std::uint64_t f1 = 0; f1 < n; ++f1)
        for (std::uint64_t f2 = 0; f2 < n; ++f2)
          row[vindex[f1] + vindex[f2]] += chr[y1][f1] * chr[y2][f2];
    }

  std::complex<double> acc = 0.0;
  for (std::uint64_t k = 0; k < q; ++k)
    for (std::uint64_t l = 0; l < q; ++l)
      for (std::uint64_t mu = 0; mu < q; ++mu)
        for (std::uint64_t nu = 0; nu < q; ++nu) {
          std::complex<double> h = 0.0;
          for (std::uint64_t x = 0; x < q; ++x) {
            auto at = [&](std::uint64_t c) {
              return g[f.add(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(c))];
            };
            h += at(k) * at(l) * std::conj(at(mu) * at(nu));
          }
          std::complex<double> xsum = 0.0;
          const auto& pl = pair[k * q + l];
          const auto& pr = pair[mu * q + nu];
          for (std::uint64_t v = 0; v < nv; ++v) xsum += std::conj(pl[v]) * pr[v];
          acc += h * xsum;
        }
  const double scale = std::pow(static_cast<double>(q), 5.0);
  return acc.real() / scale;
}

CyclicQuadrupleSum cyclic_quadruple_sum(std::uint32_t m, const Segment& u) {
  if (m == 0 || m > 8) throw std::invalid_argument("modulus must be in [1, 8]");
  if (u.length == 0 || u.length > 10) throw std::invalid_argument("segment length must be in [1, 10]");
  const std::uint32_t len = u.length;
  const std::uint32_t nv = 2 * len - 1;
  const auto roots = unit_roots(m);
  auto eps = [&](long long k) { return roots[reduce_mod(k, m)]; };

  double total = 0.0;
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y)
      for (std::uint32_t z = 0; z < m; ++z) {
        std::complex<double> s = 0.0;
        for (std::uint32_t vi = 0; vi < nv; ++vi) {
          // a + b = c + d = v; a carries no phase, so the pair factors split.
          std::complex<double> ab = 0.0, cd = 0.0;
          for (std::uint32_t i = 0; i < len; ++i) {
            const std::uint32_t jv = vi >= i ? vi - i : nv;  // partner offset
            if (jv >= len) continue;
            const long long second = u.first + static_cast<long long>(i);
            const long long first = u.first + static_cast<long long>(jv);
            ab += eps(-static_cast<long long>(x) * second);
            cd += eps(static_cast<long long>(y) * first + static_cast<long long>(z) * second);
          }
          s += ab * cd;
        }
        total += std::abs(s);
      }
  CyclicQuadrupleSum out;
  out.t = static_cast<double>(m) * total;
  const double base = static_cast<double>(std::max<std::uint32_t>(m, len));
  const double logs = 1.0 + std::log(static_cast<double>(m));
  out.bound = 64.0 * m * base * base * base * logs * logs * logs;
  if (out.t > out.bound) throw std::logic_error("quadruple sum exceeded its proven ceiling");
  return out;
}

double l4_cyclic_direct(std::uint32_t m, const std::vector<std::complex<double>>& values,
                        const Segment& u) {
  if (values.size() != m) throw std::invalid_argument("need one value per residue");
  const std::uint32_t len = u.length;
  auto at = [&](long long j) { return values[reduce_mod(j, m)]; };
  std::complex<double> acc = 0.0;
  const long long lo = u.first, hi = u.first + len;
  for (long long a = lo; a < hi; ++a)
    for (long long b = lo; b < hi; ++b)
      for (long long c = lo; c < hi; ++c) {
        const long long d = a + b - c;
        if (d < lo || d >= hi) continue;
        acc += at(a) * at(b) * std::conj(at(c) * at(d));
      }
  return acc.real();
}

double l4_cyclic_interpolation(std::uint32_t m, const std::vector<std::complex<double>>& values,
                               const Segment& u) {
  if (values.size() != m) throw std::invalid_argument("need one value per residue");
  const std::uint32_t len = u.length;
  const std::uint32_t nv = 2 * len - 1;
  const auto roots = unit_roots(m);
  auto eps = [&](long long k) { return roots[reduce_mod(k, m)]; };

  std::vector<std::complex<double>> hat(m, 0.0);
  for (std::uint32_t k = 0; k < m; ++k)
    for (std::uint32_t x = 0; x < m; ++x)
      hat[k] += values[x] * eps(static_cast<long long>(k) * x);

  std::vector<std::vector<std::complex<double>>> pair(m * m);
  for (std::uint32_t k1 = 0; k1 < m; ++k1)
    for (std::uint32_t k2 = 0; k2 < m; ++k2) {
      auto& row = pair[k1 * m + k2];
      row.assign(nv, 0.0);
      for (std::uint32_t a = 0; a < len; ++a)
        for (std::uint32_t b = 0; b < len; ++b)
          row[a + b] += eps(static_cast<long long>(k1) * (u.first + a)) *
                        eps(static_cast<long long>(k2) * (u.first + b));
    }

  std::complex<double> acc = 0.0;
  for (std::uint32_t k = 0; k < m; ++k)
    for (std::uint32_t l = 0; l < m; ++l)
      for (std::uint32_t mu = 0; mu < m; ++mu)
        for (std::uint32_t nu = 0; nu < m; ++nu) {
          std::complex<double> h = 0.0;
          for (std::uint32_t x = 0; x < m; ++x)
            h += hat[(x + k) % m] * hat[(x + l) % m] * std::conj(hat[(x + mu) % m] * hat[(x + nu) % m]);
          std::complex<double> xsum = 0.0;
          const auto& pl = pair[k * m + l];
          const auto& pr = pair[mu * m + nu];
          for (std::uint32_t v = 0; v < nv; ++v) xsum += std::conj(pl[v]) * pr[v];
          acc += h * xsum;
        }
  const double scale = std::pow(static_cast<double>(m), 5.0);
  return acc.real() / scale;
}

}  // namespace littlewood
