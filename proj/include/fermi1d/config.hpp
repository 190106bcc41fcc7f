#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermi1d/potential.hpp"
#include "fermi1d/profile.hpp"

namespace fermi1d {

/// Flat key=value run description. Recognised keys:
///   potential.name, potential.params.<name>
///   system.hbar, system.mass, system.n_particles
///   grid.min, grid.max, grid.points (each "auto" or a number)
///   run.methods (comma list), scan.gamma_list (comma list, entries 1/k)
///   output.path ("-" for stdout), output.float_format (printf, e.g. %.12e)
/// Blank lines and lines starting with '#' are ignored.
struct RunConfig {
  std::string potential_name = "harmonic";
  ParamMap potential_params;
  double hbar = 1.0;
  double mass = 1.0;
  int n_particles = 4;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<std::size_t> grid_points;
  std::vector<Method> methods = {Method::Uniform, Method::TF, Method::Exact, Method::LangerSum};
  std::vector<double> gamma_list = {1.0, 0.5, 0.25};
  std::string output_path = "-";
  std::string float_format = "%.12e";

  /// Every key with its current value, in a fixed order.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Parses config text; unknown keys and malformed values raise ConfigError.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Applies one key=value assignment (shared by the file parser and flags).
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Comma list of method names.
std::vector<Method> parse_methods(const std::string& list);
/// Comma list of gammas; each must be 1/k for a positive integer k. Entries
/// may be written as decimals or as 1/k.
std::vector<double> parse_gamma_list(const std::string& list);

}  // namespace fermi1d
