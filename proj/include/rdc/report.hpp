#pragma once

// Check records shared by the verification suites and the CLI.

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace rdc {

enum class Status { Pass, Fail, VacuousPass, Unverifiable };

std::string status_name(Status s);
inline bool status_ok(Status s) { return s == Status::Pass || s == Status::VacuousPass; }

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  bool exact = true;
  std::string residual = "0";  // Form printout for exact checks
  std::optional<std::complex<double>> value;
  std::optional<std::complex<double>> expected;
  std::optional<double> error;           // |value - expected|
  std::optional<double> error_estimate;  // quadrature estimate
  std::optional<double> tolerance;
  std::string detail;
};

CheckRecord exact_record(std::string name, bool ok, std::string residual, std::string detail = {});
CheckRecord numeric_record(std::string name, std::complex<double> value, std::complex<double> expected,
                           double tolerance, std::optional<double> error_estimate = std::nullopt,
                           std::string detail = {});

bool all_ok(const std::vector<CheckRecord>& records);

}  // namespace rdc
