#include "fermi1d/quantize.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fermi1d/error.hpp"
#include "fermi1d/numerics.hpp"

namespace fermi1d {

double wkb_energy(const PotentialModel& pot, double hbar, double lambda, double mass) {
  if (!(lambda >= -0.5)) throw std::domain_error("wkb_energy: lambda must be >= -1/2");
  const double target = 2.0 * std::numbers::pi * hbar * (lambda + 0.5);
  const double lo = pot.vmin_value();
  if (target == 0.0) return lo;
  const double top = pot.sup_value();
  auto residual = [&](double e) { return e <= lo ? -target : full_action(pot, e, mass) - target; };

  // Expand upward from the minimum until the residual changes sign.
  double step = 1e-3 * (pot.value(pot.vmin_location() + pot.length_scale()) - lo);
  double inner = lo;
  for (int i = 0; i < 200; ++i) {
    double outer = lo + step;
    bool last = false;
    if (outer >= top) {
      outer = top - 1e-8 * (top - lo);
      last = true;
    }
    double r = 0.0;
    try {
      r = residual(outer);
    } catch (const NumericalError&) {
      // The orbit next to the binding limit is too flat to resolve.
      if (!last) throw;
      break;
    }
    if (r >= 0.0) return numerics::find_root(residual, inner, outer, "wkb_energy");
    if (last) break;
    inner = outer;
    step *= 2.0;
  }
  throw SpectrumOverflow("wkb_energy: lambda=" + std::to_string(lambda) +
                         " needs an energy above the bound range at hbar=" + std::to_string(hbar));
}

SpectrumTable wkb_spectrum(const PotentialModel& pot, double hbar, const std::vector<double>& lambdas,
                           double mass) {
  SpectrumTable t;
  for (double l : lambdas) t.entries.emplace_back(l, wkb_energy(pot, hbar, l, mass));
  return t;
}

QuantumSystem build_system(const PotentialModel& pot, double hbar, double mass, int n_particles) {
  if (n_particles < 1) throw ConfigError("build_system: need at least one particle");
  if (!(hbar > 0.0) || !(mass > 0.0)) throw ConfigError("build_system: hbar and mass must be positive");
  QuantumSystem sys{pot, hbar, mass, n_particles, 0.0, TurningGeometry{}, 0.0};
  sys.fermi_energy = wkb_energy(pot, hbar, n_particles - 0.5, mass);
  sys.fermi_geometry = with_match(pot, turning_points(pot, sys.fermi_energy), mass);
  sys.omega_f = frequency(pot, sys.fermi_energy, mass);
  return sys;
}

QuantumSystem gamma_scale(const QuantumSystem& sys, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw NonIntegerParticleNumber("gamma_scale: gamma must lie in (0, 1]");
  }
  const double scaled = sys.n_particles / gamma;
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 * rounded) {
    throw NonIntegerParticleNumber("gamma_scale: N/gamma = " + std::to_string(scaled) +
                                   " is not an integer");
  }
  return build_system(sys.potential, sys.hbar * gamma, sys.mass, static_cast<int>(rounded));
}

}  // namespace fermi1d
