#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/charpoly.hpp"

namespace littlewood {

enum class NormMethod { oracle, autocorrelation, sampled_dft };

const char* norm_method_name(NormMethod m);
NormMethod norm_method_from_name(const std::string& name);

// Norms of the polynomial on the unit torus. ratio4 is the fourth power of
// the L4/L2 ratio; merit_factor = l2sq^2/(l4p4 - l2sq^2), omitted when the
// denominator is not positive.
struct NormReport {
  double l2sq = 0.0;
  double l4p4 = 0.0;
  double ratio4 = 0.0;
  std::optional<double> merit_factor;
  NormMethod method = NormMethod::autocorrelation;
};

double l2_sq(const CoefficientArray& a);

// C(u) = sum_j a_{j+u} conj(a_j) over in-range j; u is an e-tuple.
std::complex<double> autocorrelation(const CoefficientArray& a,
                                     const std::vector<long long>& u);

// In-place radix-2 transform; size must be a power of two.
void fft(std::vector<std::complex<double>>& a);

double l4p4(const CoefficientArray& a, NormMethod method);

NormMethod default_method(const CoefficientArray& a);

NormReport norm_report(const CoefficientArray& a);
NormReport norm_report(const CoefficientArray& a, NormMethod method);

// Mean of |f|^2 over the sampled-dft grid (equals l2_sq up to rounding).
double grid_mean_sq(const CoefficientArray& a);

}  // namespace littlewood
