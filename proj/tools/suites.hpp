#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "zetasphere/report.hpp"

namespace zetasphere::cli {

/// table1, functional, modulus, critical-line, gamma, divisors, hurwitz, flow, all.
const std::vector<std::string>& suite_names();

/// Runs one named battery. DomainError for an unknown name.
VerificationItems run_suite(const std::string& name, const Config& config);

}  // namespace zetasphere::cli
