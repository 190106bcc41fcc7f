#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fermi1d/quantize.hpp"

namespace fermi1d {

enum class Method { Uniform, TF, Exact, LangerSum };
enum class Quantity { Density, Ked };

const char* to_string(Method m);
const char* to_string(Quantity q);
/// "uniform", "tf", "exact", "langer_sum"; ConfigError otherwise.
Method parse_method(const std::string& name);

/// Values of n(x) or t(x) on a grid, with free-form metadata such as the
/// trapezoid integral ("integral").
struct DensityProfile {
  std::vector<double> xs;
  std::vector<double> values;
  Method method = Method::Uniform;
  Quantity quantity = Quantity::Density;
  std::vector<std::pair<std::string, std::string>> metadata;

  double integral() const;
};

/// Evaluates `method` on every grid point (which must be strictly increasing).
DensityProfile profile(const QuantumSystem& sys, const std::vector<double>& xs, Method method,
                       Quantity quantity = Quantity::Density);

}  // namespace fermi1d
