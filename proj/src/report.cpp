#include "zetasphere/report.hpp"

#include <cmath>
#include <utility>

namespace zetasphere {

const char* to_string(Status status) {
  switch (status) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kDiscrepancy:
      return "discrepancy";
  }
  return "fail";
}

Status VerificationItem::status() const {
  const double gap = std::fabs(computed - target);
  if (std::isfinite(gap) && gap <= tolerance) return Status::kPass;
  if (claim && std::isfinite(computed)) return Status::kDiscrepancy;
  return Status::kFail;
}

VerificationItem check(std::string name, double target, double computed, double tolerance,
                       std::string note) {
  return VerificationItem{std::move(name), target, computed, tolerance, false, std::move(note)};
}

VerificationItem claim(std::string name, double claimed_value, double computed,
                             double tolerance, std::string note) {
  return VerificationItem{std::move(name), claimed_value, computed, tolerance, true, std::move(note)};
}

}  // namespace zetasphere
