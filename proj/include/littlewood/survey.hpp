#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/charpoly.hpp"

namespace littlewood {

// One family member: the realized polynomial at a given order, its norms,
// and the distance to the limiting prediction.
struct SurveyRow {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint32_t e = 1;
  CharKind kind = CharKind::quadratic;
  std::vector<double> sigma;
  std::vector<double> tau;
  std::vector<std::uint32_t> s;
  std::vector<long long> t;
  double l2sq = 0.0;
  double l4p4 = 0.0;
  double ratio4 = 0.0;
  double predicted = 0.0;
  double abs_err = 0.0;
  std::optional<double> merit_factor;
  double elapsed_ms = 0.0;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
// p^k <= n for prime p and k >= 1, ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n);

struct SurveyOptions {
  // Inclusive ceiling on the surveyed orders: primes p for multiplicative
  // profiles, prime powers q (additionally capped at 2^20) for additive.
  std::uint64_t max_order = 1000;
  // Instances with more coefficients than this are skipped with a log line.
  std::uint64_t coeff_cap = std::uint64_t{1} << 22;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Rows in ascending order regardless of worker completion order; identical
// inputs give identical rows apart from elapsed_ms. Skips (even orders for
// quadratic, q <= 3 for nonquadratic, oversize or table-cap violations) are
// reported on `log` when given.
std::vector<SurveyRow> run_survey(const LimitProfile& profile, const SurveyOptions& options,
                                  std::ostream* log = nullptr);

extern const char kSurveyHeader[];  // CSV column order, fixed

std::string survey_row_csv(const SurveyRow& row);
void write_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& out);

}  // namespace littlewood
