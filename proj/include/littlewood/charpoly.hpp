#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "littlewood/field.hpp"

namespace littlewood {

// exp(2*pi*i*k/n) with exact values at the quarter points; k reduced mod n.
std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t n);

// Rounds half toward +infinity.
long long round_half_up(double x);

// Support box {0,...,s_1-1} x ... x {0,...,s_e-1}. Axis 0 is the fastest
// axis in flat indexing: flat = sum_k j_k * stride_k with stride_0 = 1.
struct Box {
  std::vector<std::uint32_t> sizes;

  std::uint32_t dim() const { return static_cast<std::uint32_t>(sizes.size()); }
  std::uint64_t cardinality() const;
  std::vector<std::uint64_t> strides() const;
  void validate() const;
};

// Coefficients over a box: either exact integers in {-1,0,1} or complex.
class CoefficientArray {
 public:
  static CoefficientArray exact(Box box, std::vector<std::int8_t> values);
  static CoefficientArray complex_valued(Box box, std::vector<std::complex<double>> values);

  bool is_exact() const { return exact_; }
  const Box& box() const { return box_; }
  std::uint32_t dim() const { return box_.dim(); }
  std::uint64_t size() const { return box_.cardinality(); }

  std::complex<double> value(std::size_t flat) const {
    return exact_ ? std::complex<double>(ivalues_[flat], 0.0) : cvalues_[flat];
  }
  int exact_value(std::size_t flat) const { return ivalues_[flat]; }
  const std::vector<std::int8_t>& exact_values() const;
  const std::vector<std::complex<double>>& complex_values() const;

  std::uint64_t zero_count() const;

 private:
  CoefficientArray() = default;
  Box box_;
  bool exact_ = false;
  std::vector<std::int8_t> ivalues_;
  std::vector<std::complex<double>> cvalues_;
};

// f(z) = sum_{j=0}^{s-1} psi(g^(j+t)) z^j; coefficients have period q-1 in j.
struct AdditivePolySpec {
  FieldRef field;
  AdditiveCharacterId psi{1};
  std::uint32_t s = 1;
  long long t = 0;

  void validate() const;
};

// f(z_1..z_e) = sum_{j in box} chi(alpha(j+t)) z^j where alpha reduces each
// coordinate mod p and reads the residues in the modulus basis of F_q.
struct MultiplicativePolySpec {
  FieldRef field;
  MultiplicativeCharacterId chi;
  Box box;
  std::vector<long long> t;

  void validate() const;
  // alpha(j + t) as a field element, for a box multi-index j.
  std::uint32_t arrangement(const std::vector<std::uint32_t>& j) const;
};

CoefficientArray build_additive(const AdditivePolySpec& spec);
CoefficientArray build_multiplicative(const MultiplicativePolySpec& spec);

// Replaces zero coefficients by `fill` (unit magnitude, default +1).
// Exact arrays stay exact when fill is +1 or -1.
CoefficientArray unimodularize(const CoefficientArray& a,
                               std::complex<double> fill = {1.0, 0.0});

// |S ∩ (ker alpha - t)| = number of zero coefficients of the build.
std::uint64_t kernel_intersection_count(const MultiplicativePolySpec& spec);

enum class CharKind { additive, nonquadratic, quadratic };

const char* char_kind_name(CharKind kind);
CharKind char_kind_from_name(const std::string& name);

// Limiting profile of a size/translation-stable family: sizes s_k ~ sigma_k*p
// (additive: s ~ sigma*(q-1)) and translations t_k ~ tau_k*p (quadratic only).
struct LimitProfile {
  CharKind kind = CharKind::quadratic;
  std::uint32_t e = 1;
  std::vector<double> sigma;
  std::vector<double> tau;  // empty unless kind == quadratic

  void validate() const;
};

using PolySpecVariant = std::variant<AdditivePolySpec, MultiplicativePolySpec>;

// One spec per entry of `orders`: prime powers q for additive profiles,
// primes p otherwise. Characters are pinned for determinism: c=1 additive,
// d=1 nonquadratic, d=(q-1)/2 quadratic. Sizes round half-up and are
// clamped to at least 1.
std::vector<PolySpecVariant> family_specs(const LimitProfile& profile,
                                          const std::vector<std::uint64_t>& orders);

}  // namespace littlewood
