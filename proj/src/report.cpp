#include "rdc/report.hpp"

#include <algorithm>
#include <cmath>

namespace rdc {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::VacuousPass:
      return "vacuous-pass";
    case Status::Unverifiable:
      return "unverifiable";
  }
  return "?";
}

CheckRecord exact_record(std::string name, bool ok, std::string residual, std::string detail) {
  CheckRecord r;
  r.name = std::move(name);
  r.status = ok ? Status::Pass : Status::Fail;
  r.exact = true;
  r.residual = ok ? "0" : std::move(residual);
  r.detail = std::move(detail);
  return r;
}

CheckRecord numeric_record(std::string name, std::complex<double> value, std::complex<double> expected,
                           double tolerance, std::optional<double> error_estimate, std::string detail) {
  CheckRecord r;
  r.name = std::move(name);
  r.exact = false;
  r.value = value;
  r.expected = expected;
  r.error = std::abs(value - expected);
  r.error_estimate = error_estimate;
  r.tolerance = tolerance;
  r.status = (std::isfinite(*r.error) && *r.error < tolerance) ? Status::Pass : Status::Fail;
  r.residual.clear();
  r.detail = std::move(detail);
  return r;
}

bool all_ok(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return status_ok(r.status); });
}

}  // namespace rdc
