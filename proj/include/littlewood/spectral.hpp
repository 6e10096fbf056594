#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "littlewood/charpoly.hpp"

namespace littlewood {

// Quadruple sum of Gauss sums over the dual group, with the predicted main
// term M and the measured slack |H - M|.
struct HQuadruple {
  std::array<std::uint64_t, 4> chars{};  // kappa, lambda, mu, nu
  std::complex<double> h;
  double m = 0.0;
  double slack = 0.0;
};

// G(psi, chi_m) for every multiplicative character index m in [0, q-1).
std::vector<std::complex<double>> gauss_table_additive(const FieldSpec& f,
                                                       const AdditiveCharacterId& psi);

// G(psi_y, chi) for every additive character element y in [0, q).
std::vector<std::complex<double>> gauss_table_multiplicative(const FieldSpec& f,
                                                             const MultiplicativeCharacterId& chi);

// H = sum over xi of G(psi, xi*kappa) G(psi, xi*lambda) conj(G(psi, xi*mu)
// G(psi, xi*nu)); M = (q-1)^3 iff {kappa,lambda} = {mu,nu} as multisets.
HQuadruple h_additive(const FieldSpec& f, const AdditiveCharacterId& psi,
                      const std::array<std::uint64_t, 4>& chars);
HQuadruple h_additive_from_table(const std::vector<std::complex<double>>& table, std::uint64_t q,
                                 const std::array<std::uint64_t, 4>& chars);

// H = sum over xi of G(xi*kappa, chi) ... ; M = q^3 iff {kappa,lambda} =
// {mu,nu}, or kappa=lambda and mu=nu with chi quadratic.
HQuadruple h_multiplicative(const FieldSpec& f, const MultiplicativeCharacterId& chi,
                            const std::array<std::uint64_t, 4>& chars);
HQuadruple h_multiplicative_from_table(const FieldSpec& f,
                                       const std::vector<std::complex<double>>& table,
                                       bool chi_quadratic,
                                       const std::array<std::uint64_t, 4>& chars);

// L4^4 through the Gauss-sum expansion; agrees with the norms module within
// 1e-6 relative. Guarded to q <= 16.
double l4_via_gauss_additive(const AdditivePolySpec& spec);
double l4_via_gauss_multiplicative(const MultiplicativePolySpec& spec);

// A contiguous run of integers {first, ..., first + length - 1}.
struct Segment {
  long long first = 0;
  std::uint32_t length = 1;
};

// T = m * sum over (x,y,z) in (Z/m)^3 of |sum_{a+b=c+d in U^4}
// e((-xb+yc+zd)/m)|, with its proven ceiling; throws if T exceeds it.
struct CyclicQuadrupleSum {
  double t = 0.0;
  double bound = 0.0;
};

CyclicQuadrupleSum cyclic_quadruple_sum(std::uint32_t m, const Segment& u);

// Fourth-power norm of sum_{j in U} values[j mod m] z^j: once by the direct
// quadruple sum, once through the dual-group expansion.
double l4_cyclic_direct(std::uint32_t m, const std::vector<std::complex<double>>& values,
                        const Segment& u);
double l4_cyclic_interpolation(std::uint32_t m, const std::vector<std::complex<double>>& values,
                               const Segment& u);

}  // namespace littlewood
