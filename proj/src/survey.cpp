#include "littlewood/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "littlewood/asymptotics.hpp"
#include "littlewood/norms.hpp"

namespace littlewood {

namespace {

constexpr std::uint64_t kAdditiveOrderCap = std::uint64_t{1} << 20;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <typename T, typename F>
std::string join(const std::vector<T>& v, F f) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += f(v[i]);
  }
  return out;
}

// Expected coefficient count without building the field.
std::uint64_t planned_cardinality(const LimitProfile& profile, std::uint64_t order) {
  if (profile.kind == CharKind::additive) {
    const double s = profile.sigma[0] * static_cast<double>(order - 1);
    return static_cast<std::uint64_t>(std::max<long long>(1, round_half_up(s)));
  }
  std::uint64_t n = 1;
  for (std::uint32_t k = 0; k < profile.e; ++k) {
    const double s = profile.sigma[k] * static_cast<double>(order);
    n *= static_cast<std::uint64_t>(std::max<long long>(1, round_half_up(s)));
  }
  return n;
}

struct SkipLog {
  std::ostream* out;
  std::mutex mu;
  void note(std::uint64_t order, const std::string& reason) {
    if (!out) return;
    std::lock_guard<std::mutex> lock(mu);
    *out << "skip order " << order << ": " << reason << "\n";
  }
};

}  // namespace

const char kSurveyHeader[] =
    "p,q,e,kind,sigma,tau,s,t,l2sq,l4p4,ratio4,predicted,abs_err,merit_factor,elapsed_ms";

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(n))
    for (std::uint64_t q = p; q <= n; q *= p) {
      out.push_back(q);
      if (q > n / p) break;  // overflow guard
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SurveyRow> run_survey(const LimitProfile& profile, const SurveyOptions& options,
                                  std::ostream* log) {
  profile.validate();
  SkipLog skip{log, {}};

  std::vector<std::uint64_t> orders;
  if (profile.kind == CharKind::additive) {
    orders = prime_powers_up_to(std::min(options.max_order, kAdditiveOrderCap));
    std::erase_if(orders, [](std::uint64_t q) { return q < 2; });
  } else {
    orders = primes_up_to(options.max_order);
    if (profile.kind == CharKind::quadratic)
      std::erase_if(orders, [](std::uint64_t p) { return p == 2; });
    else  // q <= 3 has no nontrivial nonquadratic character
      std::erase_if(orders, [&](std::uint64_t p) { return profile.e == 1 && p <= 3; });
  }

  std::vector<std::uint64_t> kept;
  for (std::uint64_t order : orders) {
    if (planned_cardinality(profile, order) > options.coeff_cap) {
      skip.note(order, "coefficient count exceeds cap");
      continue;
    }
    if (profile.kind != CharKind::additive) {
      std::uint64_t q = 1;
      bool overflow = false;
      for (std::uint32_t k = 0; k < profile.e; ++k) {
        if (q > FieldSpec::kDefaultOrderCap / order) overflow = true;
        q *= order;
      }
      if (overflow || q > FieldSpec::kDefaultOrderCap) {
        skip.note(order, "field order exceeds discrete-log table cap");
        continue;
      }
    }
    kept.push_back(order);
  }

  const double predicted = limit_ratio4(profile);
  std::vector<SurveyRow> rows(kept.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mu;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= kept.size() || failed.load()) return;
      try {
        const auto start = std::chrono::steady_clock::now();
        const auto specs = family_specs(profile, {kept[i]});
        SurveyRow row;
        row.kind = profile.kind;
        row.e = profile.e;
        row.sigma = profile.sigma;
        row.tau = profile.tau;
        CoefficientArray array = [&] {
          if (const auto* add = std::get_if<AdditivePolySpec>(&specs[0])) {
            row.p = add->field->p();
            row.q = add->field->q();
            row.e = add->field->e();
            row.s = {add->s};
            row.t = {add->t};
            return build_additive(*add);
          }
          const auto& mult = std::get<MultiplicativePolySpec>(specs[0]);
          row.p = mult.field->p();
          row.q = mult.field->q();
          row.s = mult.box.sizes;
          row.t = mult.t;
          return unimodularize(build_multiplicative(mult));
        }();
        const NormReport report = norm_report(array);
        row.l2sq = report.l2sq;
        row.l4p4 = report.l4p4;
        row.ratio4 = report.ratio4;
        row.predicted = predicted;
        row.abs_err = std::abs(row.ratio4 - predicted);
        row.merit_factor = report.merit_factor;
        row.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        rows[i] = std::move(row);
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true)) first_error = ex.what();
        return;
      }
    }
  };

  unsigned nthreads = options.threads ? options.threads : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min<unsigned>(nthreads, kept.empty() ? 1 : kept.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) throw std::runtime_error("survey worker failed: " + first_error);
  return rows;
}

std::string survey_row_csv(const SurveyRow& row) {
  std::string out;
  out += std::to_string(row.p);
  out += ',';
  out += std::to_string(row.q);
  out += ',';
  out += std::to_string(row.e);
  out += ',';
  out += char_kind_name(row.kind);
  out += ',';
  out += join(row.sigma, fmt_double);
  out += ',';
  out += join(row.tau, fmt_double);
  out += ',';
  out += join(row.s, [](std::uint32_t v) { return std::to_string(v); });
  out += ',';
  out += join(row.t, [](long long v) { return std::to_string(v); });
  out += ',';
  out += fmt_double(row.l2sq);
  out += ',';
  out += fmt_double(row.l4p4);
  out += ',';
  out += fmt_double(row.ratio4);
  out += ',';
  out += fmt_double(row.predicted);
  out += ',';
  out += fmt_double(row.abs_err);
  out += ',';
  if (row.merit_factor) out += fmt_double(*row.merit_factor);
  out += ',';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", row.elapsed_ms);
  out += buf;
  return out;
}

void write_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& out) {
  out << kSurveyHeader << "\n";
  for (const auto& row : rows) out << survey_row_csv(row) << "\n";
}

}  // namespace littlewood
