#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "fermi1d/config.hpp"
#include "fermi1d/profile.hpp"
#include "fermi1d/quantize.hpp"
#include "fermi1d/reference.hpp"

namespace fermi1d {

/// Error norms of one method against the exact oracle over one region
/// ("allowed", "turning", "forbidden" or "all"). Fractional errors only use
/// points where |exact| >= 1e-10 max|exact|.
struct RegionErrors {
  std::string region;
  std::size_t points = 0;
  double linf_abs = 0.0;
  double l2_abs = 0.0;
  double linf_frac = 0.0;
  double l2_frac = 0.0;
};

struct MethodComparison {
  Method method = Method::Uniform;
  std::vector<RegionErrors> regions;  // allowed, turning, forbidden, all
  double integral = 0.0;

  const RegionErrors& region(const std::string& name) const;
};

struct ComparisonReport {
  Quantity quantity = Quantity::Density;
  double exact_integral = 0.0;
  std::vector<MethodComparison> methods;

  const MethodComparison& method(Method m) const;
};

ComparisonReport compare_methods(const QuantumSystem& sys, const std::vector<double>& xs,
                                 const std::vector<Method>& methods, Quantity quantity,
                                 const ExactOracle& oracle);

/// Largest |n_uniform / n_exact - 1| over `points` equally spaced samples
/// of [x_-, x_+] that lie in the allowed bulk (outside the turning bands).
double bulk_linf_fraction(const QuantumSystem& sys, const ExactOracle& oracle, std::size_t points);

/// [x_- - 4 l, x_+ + 4 l] with l the turning length.
std::vector<double> default_grid(const QuantumSystem& sys, std::size_t points = 1200);

QuantumSystem system_from(const RunConfig& cfg);

/// Each command returns the CSV text it would write.
std::string cmd_density(const RunConfig& cfg);
std::string cmd_ked(const RunConfig& cfg);
std::string cmd_compare(const RunConfig& cfg, std::string* summary = nullptr);
std::string cmd_gamma_scan(const RunConfig& cfg);
std::string cmd_spectrum(const RunConfig& cfg);

/// Full command-line driver. Returns the process exit code: 0 ok, 2 for
/// configuration errors, 3 for numerical failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermi1d
