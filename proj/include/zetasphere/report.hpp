#pragma once

#include <string>
#include <vector>

namespace zetasphere {

enum class Status { kPass, kFail, kDiscrepancy };

const char* to_string(Status status);

/// One checked quantity. Items marked as claims turn into
/// discrepancy flags instead of failures when out of tolerance.
struct VerificationItem {
  std::string name;
  double target = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool claim = false;
  std::string note;

  Status status() const;
};

using VerificationItems = std::vector<VerificationItem>;

VerificationItem check(std::string name, double target, double computed, double tolerance,
                       std::string note = {});

VerificationItem claim(std::string name, double claimed_value, double computed,
                             double tolerance, std::string note = {});

}  // namespace zetasphere
