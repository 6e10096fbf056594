#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace littlewood {

bool is_prime(std::uint64_t n);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// exp(2*pi*i*k/n) for k = 0..n-1, with exact values at the quarter points.
std::vector<std::complex<double>> unit_roots(std::uint32_t n);

// The finite field F_{p^e}. Elements are indices in [0, q): index
// sum(c_i * p^i) encodes the coordinate vector (c_0, ..., c_{e-1}) in the
// modulus basis (1, x, ..., x^{e-1}). Immutable after construction; all
// methods are safe for concurrent readers.
class FieldSpec {
 public:
  static constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 26;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }
  // Monic modulus, e+1 coefficients, constant term first. For e=1 this is x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return g_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;
  std::uint32_t inverse(std::uint32_t a) const;  // a != 0

  // Exponent of x base g; x != 0.
  std::uint32_t dlog(std::uint32_t x) const;
  // g^(k mod (q-1)); accepts any signed exponent.
  std::uint32_t pow_g(std::int64_t k) const;

  std::vector<std::uint32_t> coords(std::uint32_t x) const;
  std::uint32_t element(const std::vector<std::uint32_t>& coords) const;

  // Tr(x) = x + x^p + ... + x^(p^(e-1)), as a residue in [0, p).
  std::uint32_t trace(std::uint32_t x) const;

  friend std::shared_ptr<const FieldSpec> make_field(std::uint32_t p,
                                                     std::uint32_t e,
                                                     std::uint64_t order_cap);

 private:
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> dlog_;     // q entries; dlog_[0] is a sentinel
  std::vector<std::uint32_t> pow_g_;    // q-1 entries
  std::vector<std::uint32_t> red_;      // x^(e+i) mod modulus, i in [0, e-1), row-major
  std::vector<std::uint32_t> tr_pow_;   // Tr(x^i), i in [0, e)
};

using FieldRef = std::shared_ptr<const FieldSpec>;

// Builds F_{p^e} with the smallest irreducible monic modulus (candidates
// ordered by their base-p integer encoding, constant term least significant)
// and the smallest primitive element in the element ordering.
FieldRef make_field(std::uint32_t p, std::uint32_t e,
                    std::uint64_t order_cap = FieldSpec::kDefaultOrderCap);

// psi_c(x) = exp(2*pi*i*Tr(c*x)/p); trivial iff c = 0.
struct AdditiveCharacterId {
  std::uint32_t c = 1;
  bool trivial() const { return c == 0; }
};

// chi_d(g^k) = exp(2*pi*i*d*k/(q-1)), extended by chi(0) = 0 for d != 0.
// Trivial iff d = 0; quadratic iff q odd and d = (q-1)/2.
struct MultiplicativeCharacterId {
  std::uint64_t d = 0;
  bool trivial() const { return d == 0; }
};

bool is_quadratic(const FieldSpec& f, const MultiplicativeCharacterId& chi);
std::uint64_t character_order(const FieldSpec& f,
                              const MultiplicativeCharacterId& chi);
MultiplicativeCharacterId quadratic_character(const FieldSpec& f);  // q odd

std::complex<double> eval_additive_char(const FieldSpec& f,
                                        const AdditiveCharacterId& psi,
                                        std::uint32_t x);

// 0 at x = 0 for nontrivial chi; the trivial character is never extended and
// rejects x = 0.
std::complex<double> eval_multiplicative_char(const FieldSpec& f,
                                              const MultiplicativeCharacterId& chi,
                                              std::uint32_t x);

// Exact value of the quadratic character: -1, 0 or 1. Requires q odd.
int quadratic_char_value(const FieldSpec& f, std::uint32_t x);

// G(psi, chi) = sum over nonzero a of psi(a) chi(a), by direct summation.
std::complex<double> gauss_sum(const FieldSpec& f,
                               const AdditiveCharacterId& psi,
                               const MultiplicativeCharacterId& chi);

}  // namespace littlewood
