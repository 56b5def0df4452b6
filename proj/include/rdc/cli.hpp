#pragma once

// Command-line front end: argument handling, the verification suites behind each command, and
// report output (JSON plus a human summary).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rdc/quadrature.hpp"
#include "rdc/report.hpp"

namespace rdc::cli {

/// Settings after merging defaults, the config file and flags (flags win).
struct Config {
  std::optional<int> nodes;  // periodic nodes; polar and radial default to half of it
  std::optional<int> polar;
  std::optional<int> radial;
  std::optional<double> tolerance;
  double radius = 1.0;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;

  /// Quadrature for an n-dimensional problem: explicit node counts if given, else the
  /// dimension-dependent defaults.
  QuadratureSpec spec(int n) const;
  QuadratureSpec spec_or(const QuadratureSpec& fallback) const;
  double tol(double fallback) const { return tolerance.value_or(fallback); }
};

struct TimedRecord {
  CheckRecord record;
  double runtime = 0.0;  // seconds for the step that produced the record
};

struct Report {
  std::string command;
  std::vector<std::string> arguments;
  Config config;
  std::vector<TimedRecord> records;

  bool ok() const;
  std::string json() const;
  std::string summary() const;
};

/// Runs one command; returns the exit code (0 all pass, 1 any failure, 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdc::cli
