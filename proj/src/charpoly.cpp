#include "littlewood/charpoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace littlewood {

std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t n) {
  k %= n;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

long long round_half_up(double x) { return static_cast<long long>(std::floor(x + 0.5)); }

std::uint64_t Box::cardinality() const {
  std::uint64_t n = 1;
  for (auto s : sizes) n *= s;
  return n;
}

std::vector<std::uint64_t> Box::strides() const {
  std::vector<std::uint64_t> st(sizes.size());
  std::uint64_t acc = 1;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    st[k] = acc;
    acc *= sizes[k];
  }
  return st;
}

void Box::validate() const {
  if (sizes.empty()) throw std::invalid_argument("box must have at least one axis");
  for (auto s : sizes) {
    if (s < 1) throw std::invalid_argument("box sides must be positive");
  }
}

CoefficientArray CoefficientArray::exact(Box box, std::vector<std::int8_t> values) {
  box.validate();
  if (values.size() != box.cardinality()) throw std::invalid_argument("value count mismatch");
  for (auto v : values) {
    if (v < -1 || v > 1) throw std::invalid_argument("exact coefficients must lie in {-1,0,1}");
  }
  CoefficientArray a;
  a.box_ = std::move(box);
  a.exact_ = true;
  a.ivalues_ = std::move(values);
  return a;
}

CoefficientArray CoefficientArray::complex_valued(Box box,
                                                  std::vector<std::complex<double>> values) {
  box.validate();
  if (values.size() != box.cardinality()) throw std::invalid_argument("value count mismatch");
  CoefficientArray a;
  a.box_ = std::move(box);
  a.exact_ = false;
  a.cvalues_ = std::move(values);
  return a;
}

const std::vector<std::int8_t>& CoefficientArray::exact_values() const {
  if (!exact_) throw std::logic_error("array is not exact");
  return ivalues_;
}

const std::vector<std::complex<double>>& CoefficientArray::complex_values() const {
  if (exact_) throw std::logic_error("array is exact");
  return cvalues_;
}

std::uint64_t CoefficientArray::zero_count() const {
  std::uint64_t n = 0;
  if (exact_) {
    for (auto v : ivalues_) n += (v == 0);
  } else {
    for (const auto& v : cvalues_) n += (v == std::complex<double>{0.0, 0.0});
  }
  return n;
}

void AdditivePolySpec::validate() const {
  if (!field) throw std::invalid_argument("missing field");
  if (psi.trivial()) throw std::invalid_argument("additive character must be nontrivial");
  if (psi.c >= field->q()) throw std::invalid_argument("character id out of range");
  if (s < 1) throw std::invalid_argument("support length must be positive");
}

void MultiplicativePolySpec::validate() const {
  if (!field) throw std::invalid_argument("missing field");
  if (chi.trivial() || chi.d % (field->q() - 1) == 0) {
    throw std::invalid_argument("multiplicative character must be nontrivial");
  }
  box.validate();
  if (box.dim() != field->e()) throw std::invalid_argument("box dimension must equal e");
  if (t.size() != field->e()) throw std::invalid_argument("translation dimension must equal e");
}

std::uint32_t MultiplicativePolySpec::arrangement(const std::vector<std::uint32_t>& j) const {
  const std::uint32_t p = field->p();
  std::uint32_t out = 0, mult = 1;
  for (std::size_t k = 0; k < j.size(); ++k) {
    long long v = (static_cast<long long>(j[k]) + t[k]) % p;
    if (v < 0) v += p;
    out += static_cast<std::uint32_t>(v) * mult;
    mult *= p;
  }
  return out;
}

CoefficientArray build_additive(const AdditivePolySpec& spec) {
  spec.validate();
  const FieldSpec& f = *spec.field;
  const std::uint32_t p = f.p();
  std::uint32_t y = f.pow_g(spec.t);
  const std::uint32_t g = f.generator();
  if (p == 2) {  // character values are exactly +-1
    std::vector<std::int8_t> vals(spec.s);
    for (std::uint32_t j = 0; j < spec.s; ++j) {
      vals[j] = f.trace(f.mul(spec.psi.c, y)) ? -1 : 1;
      y = f.mul(y, g);
    }
    return CoefficientArray::exact(Box{{spec.s}}, std::move(vals));
  }
  const auto roots = unit_roots(p);
  std::vector<std::complex<double>> vals(spec.s);
  for (std::uint32_t j = 0; j < spec.s; ++j) {
    vals[j] = roots[f.trace(f.mul(spec.psi.c, y))];
    y = f.mul(y, g);
  }
  return CoefficientArray::complex_valued(Box{{spec.s}}, std::move(vals));
}

namespace {

// Odometer over a box; keeps the residues (j_k + t_k) mod p current.
class ResidueWalker {
 public:
  ResidueWalker(const Box& box, const std::vector<long long>& t, std::uint32_t p)
      : box_(box), p_(p), j_(box.dim(), 0), r_(box.dim()), r0_(box.dim()) {
    for (std::size_t k = 0; k < r_.size(); ++k) {
      long long v = t[k] % p;
      if (v < 0) v += p;
      r0_[k] = static_cast<std::uint32_t>(v);
      r_[k] = r0_[k];
    }
  }

  const std::vector<std::uint32_t>& residues() const { return r_; }

  bool advance() {
    for (std::size_t k = 0; k < j_.size(); ++k) {
      if (++j_[k] < box_.sizes[k]) {
        r_[k] = (r_[k] + 1 == p_) ? 0 : r_[k] + 1;
        return true;
      }
      j_[k] = 0;
      r_[k] = r0_[k];
    }
    return false;
  }

 private:
  const Box& box_;
  std::uint32_t p_;
  std::vector<std::uint32_t> j_;
  std::vector<std::uint32_t> r_;
  std::vector<std::uint32_t> r0_;
};

std::uint32_t element_from_residues(const std::vector<std::uint32_t>& r, std::uint32_t p) {
  std::uint32_t out = 0, mult = 1;
  for (std::size_t k = 0; k < r.size(); ++k) {
    out += r[k] * mult;
    mult *= p;
  }
  return out;
}

}  // namespace

CoefficientArray build_multiplicative(const MultiplicativePolySpec& spec) {
  spec.validate();
  const FieldSpec& f = *spec.field;
  const std::uint64_t n = spec.box.cardinality();
  const std::uint64_t r = f.q() - 1;
  const std::uint64_t d = spec.chi.d % r;
  ResidueWalker walk(spec.box, spec.t, f.p());
  if (is_quadratic(f, spec.chi)) {
    std::vector<std::int8_t> vals(n);
    std::uint64_t i = 0;
    do {
      const std::uint32_t x = element_from_residues(walk.residues(), f.p());
      vals[i++] = x == 0 ? std::int8_t{0} : (f.dlog(x) & 1u) ? std::int8_t{-1} : std::int8_t{1};
    } while (walk.advance());
    return CoefficientArray::exact(spec.box, std::move(vals));
  }
  std::vector<std::complex<double>> vals(n);
  std::uint64_t i = 0;
  do {
    const std::uint32_t x = element_from_residues(walk.residues(), f.p());
    vals[i++] = x == 0 ? std::complex<double>{0.0, 0.0} : root_of_unity(d * f.dlog(x), r);
  } while (walk.advance());
  return CoefficientArray::complex_valued(spec.box, std::move(vals));
}

CoefficientArray unimodularize(const CoefficientArray& a, std::complex<double> fill) {
  if (std::abs(std::abs(fill) - 1.0) > 1e-12) {
    throw std::invalid_argument("fill must have unit magnitude");
  }
  if (a.is_exact()) {
    const bool fill_is_one = fill == std::complex<double>{1.0, 0.0};
    const bool fill_is_minus_one = fill == std::complex<double>{-1.0, 0.0};
    if (fill_is_one || fill_is_minus_one) {
      auto vals = a.exact_values();
      const std::int8_t fv = fill_is_one ? 1 : -1;
      for (auto& v : vals) {
        if (v == 0) v = fv;
      }
      return CoefficientArray::exact(a.box(), std::move(vals));
    }
  }
  std::vector<std::complex<double>> vals(a.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const auto v = a.value(i);
    vals[i] = (v == std::complex<double>{0.0, 0.0}) ? fill : v;
  }
  return CoefficientArray::complex_valued(a.box(), std::move(vals));
}

std::uint64_t kernel_intersection_count(const MultiplicativePolySpec& spec) {
  spec.validate();
  const std::uint32_t p = spec.field->p();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < spec.t.size(); ++k) {
    long long r0 = (-spec.t[k]) % p;
    if (r0 < 0) r0 += p;
    const std::uint64_t s = spec.box.sizes[k];
    const std::uint64_t hits =
        static_cast<std::uint64_t>(r0) < s ? (s - 1 - static_cast<std::uint64_t>(r0)) / p + 1 : 0;
    total *= hits;
  }
  return total;
}

const char* char_kind_name(CharKind kind) {
  switch (kind) {
    case CharKind::additive: return "additive";
    case CharKind::nonquadratic: return "nonquadratic";
    case CharKind::quadratic: return "quadratic";
  }
  throw std::logic_error("unknown kind");
}

CharKind char_kind_from_name(const std::string& name) {
  if (name == "additive") return CharKind::additive;
  if (name == "nonquadratic") return CharKind::nonquadratic;
  if (name == "quadratic") return CharKind::quadratic;
  throw std::invalid_argument("unknown character kind: " + name);
}

void LimitProfile::validate() const {
  if (e < 1) throw std::invalid_argument("e must be positive");
  if (kind == CharKind::additive && e != 1) {
    throw std::invalid_argument("additive profiles are one-dimensional");
  }
  if (sigma.size() != e) throw std::invalid_argument("sigma must have e entries");
  for (double s : sigma) {
    if (!(s > 0.0)) throw std::invalid_argument("limiting sizes must be positive");
  }
  if (kind == CharKind::quadratic) {
    if (tau.size() != e) throw std::invalid_argument("tau must have e entries");
  } else if (!tau.empty()) {
    throw std::invalid_argument("tau applies only to quadratic profiles");
  }
}

std::vector<PolySpecVariant> family_specs(const LimitProfile& profile,
                                          const std::vector<std::uint64_t>& orders) {
  profile.validate();
  if (orders.empty()) throw std::invalid_argument("empty order list");
  std::vector<PolySpecVariant> out;
  out.reserve(orders.size());
  for (std::uint64_t q : orders) {
    if (profile.kind == CharKind::additive) {
      const auto pf = prime_factors(q);
      if (pf.size() != 1) throw std::invalid_argument("additive families require prime powers");
      std::uint32_t e = 0;
      for (std::uint64_t m = q; m > 1; m /= pf[0]) ++e;
      AdditivePolySpec spec;
      spec.field = make_field(static_cast<std::uint32_t>(pf[0]), e);
      spec.psi = AdditiveCharacterId{1};
      spec.s = static_cast<std::uint32_t>(
          std::max<long long>(1, round_half_up(profile.sigma[0] * static_cast<double>(q - 1))));
      spec.t = 0;
      out.emplace_back(std::move(spec));
      continue;
    }
    if (!is_prime(q)) throw std::invalid_argument("multiplicative families require primes");
    MultiplicativePolySpec spec;
    spec.field = make_field(static_cast<std::uint32_t>(q), profile.e);
    if (profile.kind == CharKind::quadratic) {
      spec.chi = quadratic_character(*spec.field);
    } else {
      spec.chi = MultiplicativeCharacterId{1};
    }
    spec.box.sizes.resize(profile.e);
    spec.t.assign(profile.e, 0);
    for (std::uint32_t k = 0; k < profile.e; ++k) {
      spec.box.sizes[k] = static_cast<std::uint32_t>(
          std::max<long long>(1, round_half_up(profile.sigma[k] * static_cast<double>(q))));
      if (profile.kind == CharKind::quadratic) {
        spec.t[k] = round_half_up(profile.tau[k] * static_cast<double>(q));
      }
    }
    out.emplace_back(std::move(spec));
  }
  return out;
}

}  // namespace littlewood
