// Python bindings for the main operations: field inspection, polynomial
// construction, norm reports, limit formulas and their minimizers.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "littlewood/asymptotics.hpp"
#include "littlewood/charpoly.hpp"
#include "littlewood/field.hpp"
#include "littlewood/norms.hpp"
#include "littlewood/optimize.hpp"

namespace py = pybind11;

namespace {

using littlewood::CharKind;
using littlewood::CoefficientArray;

littlewood::PolySpecVariant make_spec(const std::string& kind_name, std::uint32_t p,
                                      std::uint32_t e, const std::vector<std::uint32_t>& sizes,
                                      std::vector<long long> translations,
                                      std::optional<std::uint64_t> char_index) {
  const CharKind kind = littlewood::char_kind_from_name(kind_name);
  if (kind == CharKind::additive) {
    if (sizes.size() != 1)
      throw std::invalid_argument("additive polynomials take exactly one size");
    littlewood::AdditivePolySpec spec;
    spec.field = littlewood::make_field(p, e);
    spec.psi = {char_index ? static_cast<std::uint32_t>(*char_index) : 1u};
    spec.s = sizes[0];
    spec.t = translations.empty() ? 0 : translations[0];
    spec.validate();
    return spec;
  }
  littlewood::MultiplicativePolySpec spec;
  spec.field = littlewood::make_field(p, e);
  if (char_index)
    spec.chi = {*char_index};
  else if (kind == CharKind::quadratic)
    spec.chi = littlewood::quadratic_character(*spec.field);
  else
    spec.chi = {1};
  spec.box.sizes = sizes;
  spec.t = translations.empty() ? std::vector<long long>(sizes.size(), 0)
                                : std::move(translations);
  spec.validate();
  return spec;
}

CoefficientArray build_array(const littlewood::PolySpecVariant& spec) {
  if (const auto* add = std::get_if<littlewood::AdditivePolySpec>(&spec))
    return littlewood::build_additive(*add);
  return littlewood::build_multiplicative(std::get<littlewood::MultiplicativePolySpec>(spec));
}

littlewood::LimitProfile make_profile(const std::string& kind_name, std::uint32_t e,
                                      const std::vector<double>& sigma,
                                      const std::vector<double>& tau) {
  littlewood::LimitProfile profile;
  profile.kind = littlewood::char_kind_from_name(kind_name);
  profile.e = e;
  profile.sigma = sigma;
  profile.tau = tau;
  profile.validate();
  return profile;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "character polynomials over finite fields: norms, limits, minimizers";

  m.def(
      "field_info",
      [](std::uint32_t p, std::uint32_t e) {
        const auto f = littlewood::make_field(p, e);
        py::dict out;
        out["p"] = f->p();
        out["e"] = f->e();
        out["q"] = f->q();
        out["modulus"] = f->modulus();
        out["generator"] = f->generator();
        return out;
      },
      py::arg("p"), py::arg("e") = 1);

  m.def(
      "build",
      [](const std::string& kind, std::uint32_t p, const std::vector<std::uint32_t>& sizes,
         std::uint32_t e, std::vector<long long> translations,
         std::optional<std::uint64_t> char_index, bool unimodular) {
        auto array = build_array(make_spec(kind, p, e, sizes, std::move(translations), char_index));
        if (unimodular) array = littlewood::unimodularize(array);
        py::dict out;
        out["sizes"] = array.box().sizes;
        out["exact"] = array.is_exact();
        out["zeros"] = array.zero_count();
        if (array.is_exact()) {
          py::list values;
          for (std::uint64_t i = 0; i < array.size(); ++i) values.append(array.exact_value(i));
          out["values"] = std::move(values);
        } else {
          py::list values;
          for (std::uint64_t i = 0; i < array.size(); ++i) values.append(array.value(i));
          out["values"] = std::move(values);
        }
        return out;
      },
      py::arg("kind"), py::arg("p"), py::arg("sizes"), py::arg("e") = 1,
      py::arg("translations") = std::vector<long long>{}, py::arg("char_index") = std::nullopt,
      py::arg("unimodular") = false);

  m.def(
      "norms",
      [](const std::string& kind, std::uint32_t p, const std::vector<std::uint32_t>& sizes,
         std::uint32_t e, std::vector<long long> translations,
         std::optional<std::uint64_t> char_index, std::optional<std::string> method,
         bool unimodular) {
        auto array = build_array(make_spec(kind, p, e, sizes, std::move(translations), char_index));
        if (unimodular) array = littlewood::unimodularize(array);
        const auto report =
            method ? littlewood::norm_report(array, littlewood::norm_method_from_name(*method))
                   : littlewood::norm_report(array);
        py::dict out;
        out["l2sq"] = report.l2sq;
        out["l4p4"] = report.l4p4;
        out["ratio4"] = report.ratio4;
        out["merit_factor"] = report.merit_factor ? py::cast(*report.merit_factor) : py::none();
        out["method"] = littlewood::norm_method_name(report.method);
        return out;
      },
      py::arg("kind"), py::arg("p"), py::arg("sizes"), py::arg("e") = 1,
      py::arg("translations") = std::vector<long long>{}, py::arg("char_index") = std::nullopt,
      py::arg("method") = std::nullopt, py::arg("unimodular") = false);

  m.def(
      "limit_ratio4",
      [](const std::string& kind, std::uint32_t e, const std::vector<double>& sigma,
         const std::vector<double>& tau) {
        return littlewood::limit_ratio4(make_profile(kind, e, sigma, tau));
      },
      py::arg("kind"), py::arg("e"), py::arg("sigma"), py::arg("tau") = std::vector<double>{});

  m.def(
      "minimize",
      [](const std::string& kind, std::uint32_t e) {
        const auto m2 = littlewood::minimize(e, littlewood::char_kind_from_name(kind));
        py::dict out;
        out["e"] = m2.e;
        out["kind"] = littlewood::char_kind_name(m2.kind);
        out["x_star"] = m2.x_star;
        out["value4"] = m2.value4;
        out["tau_star"] = m2.kind == CharKind::quadratic ? py::cast(m2.tau_star) : py::none();
        out["interval"] = py::make_tuple(m2.interval_lo, m2.interval_hi);
        out["residual"] = m2.residual;
        return out;
      },
      py::arg("kind"), py::arg("e"));
}
