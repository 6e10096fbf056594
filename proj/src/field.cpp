#include "littlewood/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace littlewood {

namespace {

constexpr std::uint32_t kMaxE = 32;

// ---- dense polynomials over Z/pZ, coefficients low-degree first ----

using Poly = std::vector<std::uint32_t>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::tie(t, nt) = std::pair{nt, t - qt * nt};
    std::tie(r, nr) = std::pair{nr, r - qt * nr};
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly pmod(Poly a, const Poly& f, std::uint32_t p) {
  ptrim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t inv_lead = mod_inverse(f[df], p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * inv_lead % p;
    if (c != 0) {
      for (std::size_t i = 0; i <= df; ++i) {
        std::uint64_t v = a[i + shift] + (p - static_cast<std::uint32_t>(c * f[i] % p));
        a[i + shift] = static_cast<std::uint32_t>(v % p);
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return pmod(std::move(prod), f, p);
}

Poly ppowmod(Poly base, std::uint64_t n, const Poly& f, std::uint32_t p) {
  Poly acc{1};
  base = pmod(std::move(base), f, p);
  while (n != 0) {
    if (n & 1u) acc = pmulmod(acc, base, f, p);
    base = pmulmod(base, base, f, p);
    n >>= 1u;
  }
  return acc;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint32_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
  }
  return a;
}

// x^(p^k) mod f.
Poly frobenius_power(std::uint32_t k, const Poly& f, std::uint32_t p) {
  Poly u{0, 1};
  for (std::uint32_t i = 0; i < k; ++i) u = ppowmod(std::move(u), p, f, p);
  return u;
}

bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * a + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

bool is_irreducible(const Poly& f, std::uint32_t p, std::uint32_t e) {
  if (e == 1) return true;
  if (f[0] == 0) return false;
  if (e <= 3) return !has_root(f, p);
  // x^(p^e) == x mod f, and x^(p^(e/r)) - x coprime to f for prime r | e.
  Poly x{0, 1};
  if (frobenius_power(e, f, p) != x) return false;
  for (std::uint64_t r : prime_factors(e)) {
    Poly diff = frobenius_power(static_cast<std::uint32_t>(e / r), f, p);
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    Poly g = pgcd(diff, f, p);
    if (!(g.size() == 1 && g[0] == 1)) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::complex<double>> unit_roots(std::uint32_t n) {
  std::vector<std::complex<double>> r(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (k == 0) {
      r[k] = {1.0, 0.0};
    } else if (2 * k == n) {
      r[k] = {-1.0, 0.0};
    } else if (4 * k == n) {
      r[k] = {0.0, 1.0};
    } else if (4 * k == 3 * n) {
      r[k] = {0.0, -1.0};
    } else {
      r[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    }
  }
  return r;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  if (e_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  std::uint32_t da[kMaxE], db[kMaxE];
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::uint64_t prod[2 * kMaxE] = {0};
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  for (std::uint32_t k = 2 * e_ - 2; k >= e_; --k) {
    const std::uint64_t c = prod[k] % p_;
    if (c != 0) {
      const std::uint32_t* row = red_.data() + static_cast<std::size_t>(k - e_) * e_;
      for (std::uint32_t j = 0; j < e_; ++j) prod[j] += c * row[j];
    }
    if (k == e_) break;
  }
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += static_cast<std::uint32_t>(prod[i] % p_) * mult;
    mult *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t n) const {
  std::uint32_t acc = 1;
  while (n != 0) {
    if (n & 1u) acc = mul(acc, a);
    a = mul(a, a);
    n >>= 1u;
  }
  return acc;
}

std::uint32_t FieldSpec::inverse(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  const std::uint64_t r = q_ - 1;
  return pow_g_[(r - dlog(a)) % r];
}

std::uint32_t FieldSpec::dlog(std::uint32_t x) const {
  if (x == 0 || x >= q_) throw std::invalid_argument("dlog requires a nonzero field element");
  return dlog_[x];
}

std::uint32_t FieldSpec::pow_g(std::int64_t k) const {
  const std::int64_t r = static_cast<std::int64_t>(q_) - 1;
  std::int64_t m = k % r;
  if (m < 0) m += r;
  return pow_g_[static_cast<std::size_t>(m)];
}

std::vector<std::uint32_t> FieldSpec::coords(std::uint32_t x) const {
  std::vector<std::uint32_t> c(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

std::uint32_t FieldSpec::element(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != e_) throw std::invalid_argument("coordinate count must equal e");
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (coords[i] >= p_) throw std::invalid_argument("coordinate not reduced mod p");
    out += coords[i] * mult;
    mult *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::trace(std::uint32_t x) const {
  if (x >= q_) throw std::invalid_argument("element out of range");
  std::uint64_t t = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    t += static_cast<std::uint64_t>(x % p_) * tr_pow_[i];
    x /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

FieldRef make_field(std::uint32_t p, std::uint32_t e, std::uint64_t order_cap) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1) throw std::invalid_argument("e must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > order_cap) throw std::invalid_argument("field order exceeds the configured cap");
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->e_ = e;
  spec->q_ = q;

  // Modulus: first irreducible candidate in base-p integer-encoding order.
  Poly f;
  for (std::uint64_t n = 0; n < q; ++n) {
    Poly cand(e + 1, 0);
    std::uint64_t m = n;
    for (std::uint32_t i = 0; i < e; ++i) {
      cand[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    cand[e] = 1;
    if (is_irreducible(cand, p, e)) {
      f = std::move(cand);
      break;
    }
  }
  if (f.empty()) throw std::logic_error("no irreducible modulus found");
  spec->modulus_ = f;

  if (e >= 2) {
    // red_[i] = coefficients of x^(e+i) mod f, for i in [0, e-1).
    spec->red_.assign(static_cast<std::size_t>(e - 1) * e, 0);
    std::vector<std::uint32_t> cur(e);
    for (std::uint32_t j = 0; j < e; ++j) cur[j] = (p - f[j]) % p;  // x^e mod f
    for (std::uint32_t i = 0; i + 1 < e; ++i) {
      std::copy(cur.begin(), cur.end(), spec->red_.begin() + static_cast<std::size_t>(i) * e);
      // cur <- x * cur mod f
      const std::uint32_t top = cur[e - 1];
      for (std::uint32_t j = e - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::uint32_t j = 0; j < e; ++j) {
          cur[j] = static_cast<std::uint32_t>(
              (cur[j] + static_cast<std::uint64_t>(top) * ((p - f[j]) % p)) % p);
        }
      }
    }
  }

  // Smallest primitive element in the element ordering.
  const std::uint64_t r = q - 1;
  const auto factors = prime_factors(r);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (std::uint64_t d : factors) {
      if (spec->pow(cand, r / d) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element found");
  spec->g_ = g;

  spec->pow_g_.resize(r);
  spec->dlog_.assign(q, 0);
  std::uint32_t acc = 1;
  for (std::uint64_t k = 0; k < r; ++k) {
    spec->pow_g_[k] = acc;
    spec->dlog_[acc] = static_cast<std::uint32_t>(k);
    acc = spec->mul(acc, g);
  }
  if (acc != 1) throw std::logic_error("generator order mismatch");

  // Tr(x^i) for the basis powers; trace of any element follows by linearity.
  spec->tr_pow_.resize(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    std::uint32_t basis = 1;
    for (std::uint32_t k = 0; k < i; ++k) basis *= p;  // element x^i
    std::uint32_t t = 0;
    std::uint32_t frob = basis;
    for (std::uint32_t k = 0; k < e; ++k) {
      t = spec->add(t, frob);
      frob = spec->pow(frob, p);
    }
    if (t >= p) throw std::logic_error("trace left the prime subfield");
    spec->tr_pow_[i] = t;
  }

  return spec;
}

bool is_quadratic(const FieldSpec& f, const MultiplicativeCharacterId& chi) {
  if (f.q() % 2 == 0) return false;
  const std::uint64_t r = f.q() - 1;
  return chi.d % r == r / 2;
}

std::uint64_t character_order(const FieldSpec& f, const MultiplicativeCharacterId& chi) {
  const std::uint64_t r = f.q() - 1;
  const std::uint64_t d = chi.d % r;
  if (d == 0) return 1;
  return r / std::gcd(d, r);
}

MultiplicativeCharacterId quadratic_character(const FieldSpec& f) {
  if (f.q() % 2 == 0) throw std::invalid_argument("no quadratic character in characteristic 2");
  return MultiplicativeCharacterId{(f.q() - 1) / 2};
}

std::complex<double> eval_additive_char(const FieldSpec& f, const AdditiveCharacterId& psi,
                                        std::uint32_t x) {
  if (x >= f.q()) throw std::invalid_argument("element out of range");
  if (psi.c >= f.q()) throw std::invalid_argument("character id out of range");
  const std::uint32_t t = f.trace(f.mul(psi.c, x));
  if (t == 0) return {1.0, 0.0};
  if (f.p() == 2) return {-1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * t / f.p());
}

std::complex<double> eval_multiplicative_char(const FieldSpec& f,
                                              const MultiplicativeCharacterId& chi,
                                              std::uint32_t x) {
  if (x >= f.q()) throw std::invalid_argument("element out of range");
  const std::uint64_t r = f.q() - 1;
  const std::uint64_t d = chi.d % r;
  if (x == 0) {
    if (d == 0) throw std::invalid_argument("the trivial character is not extended at 0");
    return {0.0, 0.0};
  }
  const std::uint64_t k = d * f.dlog(x) % r;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == r) return {-1.0, 0.0};
  if (4 * k == r) return {0.0, 1.0};
  if (4 * k == 3 * r) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r));
}

int quadratic_char_value(const FieldSpec& f, std::uint32_t x) {
  if (f.q() % 2 == 0) throw std::invalid_argument("no quadratic character in characteristic 2");
  if (x >= f.q()) throw std::invalid_argument("element out of range");
  if (x == 0) return 0;
  return (f.dlog(x) & 1u) ? -1 : 1;
}

std::complex<double> gauss_sum(const FieldSpec& f, const AdditiveCharacterId& psi,
                               const MultiplicativeCharacterId& chi) {
  std::complex<double> total{0.0, 0.0};
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    total += eval_additive_char(f, psi, a) * eval_multiplicative_char(f, chi, a);
  }
  return total;
}

}  // namespace littlewood
