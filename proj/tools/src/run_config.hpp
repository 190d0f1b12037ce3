#pragma once

#include "pdmsusy/mass.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pdmsusy::cli {

enum class OutputFormat { csv, json };

/// Invalid or missing command-line input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<std::string> mass;
  std::optional<std::string> v0;
  std::optional<std::string> w;
  std::optional<std::string> ordering;
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::optional<double> epsilon;
  double lambda = 1.0;
  double big_a = 1.0;
  double c = 1.0;
  std::optional<double> a;
  Interval domain = kDefaultDomain;
  std::optional<std::size_t> points;
  std::size_t levels = 4;
  std::optional<double> tolerance;
  double zref = 0.0;
  double probe = 1.0;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output;
  std::optional<std::string> vectors;
};

/// Parses "MIN:MAX" with MIN < MAX.
Interval parse_domain(const std::string& text);

/// Mass from --mass, else the rational-square family from --a.
MassProfile resolve_mass(const RunConfig& cfg);

/// Explicit --alpha/--gamma (both required together), else --ordering
/// (default zk). Supplying both forms is an error.
OrderingParameters resolve_ordering(const RunConfig& cfg);

std::size_t resolve_points(const RunConfig& cfg, std::size_t fallback);

}  // namespace pdmsusy::cli
