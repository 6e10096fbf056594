#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "littlewood/report.hpp"

namespace littlewood {

// Suite names accepted by run_suite, in canonical order:
// field, norms, spectral, asymptotics, bounds.
std::vector<std::string> verify_suite_names();

// Orders used by the field/spectral suites when none are given.
std::vector<std::uint64_t> default_verify_orders();  // {5, 7, 8, 9}

VerificationReport verify_field(const std::vector<std::uint64_t>& orders);
VerificationReport verify_norms();
VerificationReport verify_spectral(const std::vector<std::uint64_t>& orders);
VerificationReport verify_asymptotics();
VerificationReport verify_bounds();

// Dispatch by suite name; `orders` applies to field and spectral.
VerificationReport run_suite(const std::string& name, const std::vector<std::uint64_t>& orders);

}  // namespace littlewood
