#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fermi1d {

/// Named real parameters of a potential, e.g. {"D": 12.5, "a": 0.5}.
using ParamMap = std::map<std::string, double, std::less<>>;

/// Smooth single-well binding potential v(x).
///
/// The built-ins all have their minimum at x = 0 with v(0) = 0:
///   harmonic       v = omega^2 x^2 / 2
///   morse          v = D (1 - exp(-a x))^2
///   quartic        v = c4 x^4 + c2 x^2
///   poschl_teller  v = D tanh^2(a x)   (the -D sech^2 well shifted up by D)
///
/// Every energy in (vmin_value, sup_value) has exactly two simple turning
/// points.
class PotentialModel {
 public:
  enum class Kind { Harmonic, Morse, Quartic, PoschlTeller };

  static PotentialModel harmonic(double omega = 1.0);
  static PotentialModel morse(double depth, double range);
  static PotentialModel quartic(double c4 = 0.25, double c2 = 0.5);
  static PotentialModel poschl_teller(double depth, double range);

  double value(double x) const;
  double derivative(double x) const;
  /// v(x0 + d) - v(x0), accurate for small d (no cancellation).
  double rise(double x0, double d) const;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const ParamMap& params() const { return params_; }

  double vmin_location() const { return 0.0; }
  double vmin_value() const { return 0.0; }
  /// Least upper bound of v on the domain; +inf for confining wells.
  double sup_value() const;
  double domain_lo() const { return -std::numeric_limits<double>::infinity(); }
  double domain_hi() const { return std::numeric_limits<double>::infinity(); }
  /// Width of the well bottom; used as the initial step of bracketing scans.
  double length_scale() const;

 private:
  PotentialModel(Kind kind, std::string name, ParamMap params);

  Kind kind_;
  std::string name_;
  ParamMap params_;
  // Cached copies of the two shape parameters (meaning depends on kind_).
  double p0_ = 0.0;
  double p1_ = 0.0;
};

/// Builds a built-in potential by name. Missing parameters take the
/// defaults below; unknown names or parameter keys raise ConfigError.
///   harmonic: omega=1     morse: D=12.5, a=0.5
///   quartic: c4=0.25, c2=0.5     poschl_teller: D=12.5, a=0.5
PotentialModel make_potential(std::string_view name, const ParamMap& params = {});

std::vector<std::string> builtin_potential_names();

}  // namespace fermi1d
