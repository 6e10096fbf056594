// Command-line surface: field inspection, polynomial construction and norms,
// limit evaluation/minimization, convergence surveys, verification suites.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "littlewood/asymptotics.hpp"
#include "littlewood/charpoly.hpp"
#include "littlewood/field.hpp"
#include "littlewood/norms.hpp"
#include "littlewood/optimize.hpp"
#include "littlewood/survey.hpp"
#include "littlewood/verify.hpp"

namespace {

using littlewood::CharKind;
using littlewood::CoefficientArray;
using nlohmann::json;

struct PolyFlags {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::string kind = "quadratic";
  std::int64_t char_index = -1;  // negative: pick the kind's default
  std::vector<std::uint32_t> sizes;
  std::vector<long long> translations;
};

littlewood::PolySpecVariant make_spec(const PolyFlags& flags) {
  const CharKind kind = littlewood::char_kind_from_name(flags.kind);
  if (kind == CharKind::additive) {
    if (flags.sizes.size() != 1)
      throw std::invalid_argument("additive polynomials take exactly one size");
    littlewood::AdditivePolySpec spec;
    spec.field = littlewood::make_field(flags.p, flags.e);
    spec.psi = {flags.char_index < 0 ? 1u : static_cast<std::uint32_t>(flags.char_index)};
    spec.s = flags.sizes[0];
    spec.t = flags.translations.empty() ? 0 : flags.translations[0];
    spec.validate();
    return spec;
  }
  littlewood::MultiplicativePolySpec spec;
  spec.field = littlewood::make_field(flags.p, flags.e);
  if (flags.char_index >= 0)
    spec.chi = {static_cast<std::uint64_t>(flags.char_index)};
  else if (kind == CharKind::quadratic)
    spec.chi = littlewood::quadratic_character(*spec.field);
  else
    spec.chi = {1};
  spec.box.sizes = flags.sizes;
  spec.t = flags.translations.empty() ? std::vector<long long>(flags.sizes.size(), 0)
                                      : flags.translations;
  spec.validate();
  return spec;
}

CoefficientArray build_from_spec(const littlewood::PolySpecVariant& spec) {
  if (const auto* add = std::get_if<littlewood::AdditivePolySpec>(&spec))
    return littlewood::build_additive(*add);
  return littlewood::build_multiplicative(std::get<littlewood::MultiplicativePolySpec>(spec));
}

littlewood::LimitProfile make_profile(const std::string& kind_name, std::uint32_t e,
                                      std::vector<double> sigma, std::vector<double> tau) {
  littlewood::LimitProfile profile;
  profile.kind = littlewood::char_kind_from_name(kind_name);
  profile.e = e;
  if (sigma.size() == 1 && e > 1) sigma.assign(e, sigma[0]);
  profile.sigma = std::move(sigma);
  if (profile.kind == CharKind::quadratic) {
    if (tau.empty()) tau.assign(profile.e, 0.0);
    if (tau.size() == 1 && e > 1) tau.assign(e, tau[0]);
  }
  profile.tau = std::move(tau);
  profile.validate();
  return profile;
}

std::string modulus_string(const std::vector<std::uint32_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(coeffs[i]);
      continue;
    }
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void print_array_text(const CoefficientArray& a, std::ostream& out) {
  const auto& sizes = a.box().sizes;
  const std::uint64_t line = sizes[0];
  const std::uint64_t slab = sizes.size() > 1 ? line * sizes[1] : line;
  for (std::uint64_t flat = 0; flat < a.size(); ++flat) {
    if (a.is_exact()) {
      const int v = a.exact_value(flat);
      out << (v > 0 ? '+' : v < 0 ? '-' : '0');
    } else {
      const auto v = a.value(flat);
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.6g%+.6gi", v.real(), v.imag());
      out << buf << (flat % line == line - 1 ? "" : " ");
    }
    if (flat % line == line - 1) out << "\n";
    if (a.dim() > 2 && flat % slab == slab - 1 && flat + 1 < a.size()) out << "\n";
  }
}

json array_json(const CoefficientArray& a) {
  json values = json::array();
  for (std::uint64_t flat = 0; flat < a.size(); ++flat) {
    if (a.is_exact()) {
      values.push_back(a.exact_value(flat));
    } else {
      const auto v = a.value(flat);
      values.push_back(json::array({v.real(), v.imag()}));
    }
  }
  return json{{"sizes", a.box().sizes},
              {"exact", a.is_exact()},
              {"zeros", a.zero_count()},
              {"values", std::move(values)}};
}

json norm_json(const littlewood::NormReport& r) {
  json out{{"l2sq", r.l2sq},
           {"l4p4", r.l4p4},
           {"ratio4", r.ratio4},
           {"method", littlewood::norm_method_name(r.method)}};
  if (r.merit_factor)
    out["merit_factor"] = *r.merit_factor;
  else
    out["merit_factor"] = nullptr;
  return out;
}

json report_json(const littlewood::VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{
        {"id", c.id}, {"law", c.law}, {"pass", c.pass}, {"slack", c.slack}, {"bound", c.bound}});
  return json{{"suite", report.suite},
              {"pass", report.pass()},
              {"failed", report.failed_count()},
              {"max_slack", report.max_slack()},
              {"checks", std::move(checks)}};
}

int run(int argc, char** argv) {
  CLI::App app{"character polynomials over finite fields: norms, limits, surveys"};
  app.require_subcommand(1);

  PolyFlags poly;
  std::string method_name;
  bool as_json = false;
  std::string out_path;

  // field info
  auto* field_cmd = app.add_subcommand("field", "finite field inspection");
  field_cmd->require_subcommand(1);
  auto* info_cmd = field_cmd->add_subcommand("info", "modulus, generator and sizes of F_{p^e}");
  info_cmd->add_option("--p", poly.p, "characteristic (prime)")->required();
  info_cmd->add_option("--e", poly.e, "extension degree");
  info_cmd->add_flag("--json", as_json, "emit JSON");
  info_cmd->callback([&] {
    const auto f = littlewood::make_field(poly.p, poly.e);
    if (as_json) {
      std::cout << json{{"p", f->p()},
                        {"e", f->e()},
                        {"q", f->q()},
                        {"modulus", f->modulus()},
                        {"generator", f->generator()},
                        {"generator_coords", f->coords(f->generator())}}
                       .dump(2)
                << "\n";
      return;
    }
    std::cout << "q = " << f->q() << " (p = " << f->p() << ", e = " << f->e() << ")\n"
              << "modulus = " << modulus_string(f->modulus()) << "\n"
              << "generator = " << f->generator() << "\n";
  });

  // poly build / poly norms
  auto* poly_cmd = app.add_subcommand("poly", "character polynomial construction and norms");
  poly_cmd->require_subcommand(1);
  auto add_poly_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", poly.p, "characteristic (prime)")->required();
    cmd->add_option("--e", poly.e, "extension degree / variables");
    cmd->add_option("--kind", poly.kind, "additive | nonquadratic | quadratic");
    cmd->add_option("--char-index", poly.char_index,
                    "character exponent (additive: c, multiplicative: d)");
    cmd->add_option("--sizes", poly.sizes, "support sizes per axis")
        ->required()
        ->delimiter(',');
    cmd->add_option("--translations", poly.translations, "translation per axis")->delimiter(',');
    cmd->add_flag("--json", as_json, "emit JSON");
  };
  auto* build_cmd = poly_cmd->add_subcommand("build", "emit the coefficient array");
  add_poly_flags(build_cmd);
  build_cmd->callback([&] {
    const auto array = build_from_spec(make_spec(poly));
    if (as_json)
      std::cout << array_json(array).dump(2) << "\n";
    else
      print_array_text(array, std::cout);
  });
  auto* norms_cmd = poly_cmd->add_subcommand("norms", "L2/L4 norm report");
  add_poly_flags(norms_cmd);
  norms_cmd->add_option("--method", method_name, "oracle | autocorrelation | sampled-dft");
  norms_cmd->callback([&] {
    const auto array = build_from_spec(make_spec(poly));
    const auto report =
        method_name.empty()
            ? littlewood::norm_report(array)
            : littlewood::norm_report(array, littlewood::norm_method_from_name(method_name));
    if (as_json) {
      std::cout << norm_json(report).dump(2) << "\n";
      return;
    }
    std::cout << "l2sq = " << report.l2sq << "\nl4p4 = " << report.l4p4
              << "\nratio4 = " << report.ratio4 << "\nmerit_factor = ";
    if (report.merit_factor)
      std::cout << *report.merit_factor;
    else
      std::cout << "n/a";
    std::cout << "\nmethod = " << littlewood::norm_method_name(report.method) << "\n";
  });

  // limit eval / limit minimize
  std::string kind_name = "quadratic";
  std::uint32_t dim = 1;
  std::vector<double> sigma, tau;
  auto* limit_cmd = app.add_subcommand("limit", "limit formulas and their minimization");
  limit_cmd->require_subcommand(1);
  auto* eval_cmd = limit_cmd->add_subcommand("eval", "limit ratio4 of a stable family");
  eval_cmd->add_option("--kind", kind_name, "additive | nonquadratic | quadratic");
  eval_cmd->add_option("--e", dim, "number of variables");
  eval_cmd->add_option("--sigma", sigma, "limiting sizes")->required()->delimiter(',');
  eval_cmd->add_option("--tau", tau, "limiting translations (quadratic)")->delimiter(',');
  eval_cmd->add_flag("--json", as_json, "emit JSON");
  eval_cmd->callback([&] {
    const auto profile = make_profile(kind_name, dim, sigma, tau);
    const double value = littlewood::limit_ratio4(profile);
    if (as_json) {
      std::cout << json{{"kind", littlewood::char_kind_name(profile.kind)},
                        {"e", profile.e},
                        {"sigma", profile.sigma},
                        {"tau", profile.tau},
                        {"value", value}}
                       .dump(2)
                << "\n";
      return;
    }
    std::cout << "limit ratio4 = " << value << "\n";
  });
  auto* min_cmd = limit_cmd->add_subcommand("minimize", "minimal limit ratio4 over equal sizes");
  min_cmd->add_option("--kind", kind_name, "additive | nonquadratic | quadratic");
  min_cmd->add_option("--e", dim, "number of variables");
  min_cmd->callback([&] {
    const auto m = littlewood::minimize(dim, littlewood::char_kind_from_name(kind_name));
    json out{{"e", m.e},
             {"kind", littlewood::char_kind_name(m.kind)},
             {"x_star", m.x_star},
             {"value4", m.value4},
             {"interval", {m.interval_lo, m.interval_hi}},
             {"residual", m.residual}};
    if (m.kind == CharKind::quadratic)
      out["tau_star"] = m.tau_star;
    else
      out["tau_star"] = nullptr;
    std::cout << out.dump(2) << "\n";
  });

  // survey
  std::uint64_t primes_max = 1000;
  auto* survey_cmd = app.add_subcommand("survey", "convergence survey over a prime family (CSV)");
  survey_cmd->add_option("--kind", kind_name, "additive | nonquadratic | quadratic");
  survey_cmd->add_option("--e", dim, "number of variables");
  survey_cmd->add_option("--sigma", sigma, "limiting sizes")->required()->delimiter(',');
  survey_cmd->add_option("--tau", tau, "limiting translations (quadratic)")->delimiter(',');
  survey_cmd->add_option("--primes-max", primes_max, "inclusive order ceiling");
  survey_cmd->add_option("--out", out_path, "output file (default stdout)");
  survey_cmd->callback([&] {
    const auto profile = make_profile(kind_name, dim, sigma, tau);
    littlewood::SurveyOptions options;
    options.max_order = primes_max;
    const auto rows = littlewood::run_survey(profile, options, &std::cerr);
    if (out_path.empty()) {
      littlewood::write_survey_csv(rows, std::cout);
      return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    littlewood::write_survey_csv(rows, file);
  });

  // verify
  std::vector<std::string> suites;
  std::vector<std::uint64_t> orders;
  int verify_exit = 0;
  auto* verify_cmd = app.add_subcommand("verify", "invariant suites (JSON report, exit 0/1)");
  verify_cmd->add_option("suites", suites, "subset of: field norms spectral asymptotics bounds");
  verify_cmd->add_option("--q", orders, "field orders for the field/spectral suites")
      ->delimiter(',');
  verify_cmd->callback([&] {
    const auto names = suites.empty() ? littlewood::verify_suite_names() : suites;
    json reports = json::array();
    bool all_pass = true;
    for (const auto& name : names) {
      const auto report = littlewood::run_suite(name, orders);
      all_pass = all_pass && report.pass();
      reports.push_back(report_json(report));
    }
    std::cout << json{{"pass", all_pass}, {"reports", std::move(reports)}}.dump(2) << "\n";
    verify_exit = all_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verify_exit;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
