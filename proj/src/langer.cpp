#include "fermi1d/langer.hpp"

#include <cmath>

#include "fermi1d/airy.hpp"

namespace fermi1d {

LangerOrbit langer_orbit(const QuantumSystem& sys, double energy) {
  LangerOrbit o;
  o.energy = energy;
  o.geometry = with_match(sys.potential, turning_points(sys.potential, energy), sys.mass);
  o.omega = frequency(sys.potential, energy, sys.mass);
  return o;
}

LangerPoint z_of(const QuantumSystem& sys, const LangerOrbit& orbit, double x) {
  const ActionValue s = action(sys.potential, orbit.geometry, x, sys.mass);
  LangerPoint lp;
  lp.s_magnitude = s.magnitude;
  lp.side = s.side;
  lp.region = s.region;
  const double mag = std::pow(1.5 * s.magnitude / sys.hbar, 2.0 / 3.0);
  if (s.region == Region::Allowed) lp.z = mag;
  else if (s.region == Region::Forbidden) lp.z = -mag;
  return lp;
}

LangerPoint z_of(const QuantumSystem& sys, double x, double energy) {
  return z_of(sys, langer_orbit(sys, energy), x);
}

double langer_wavefunction(const QuantumSystem& sys, const LangerOrbit& orbit, double x) {
  const TurningGeometry& g = orbit.geometry;
  const Side side = anchor_side(g, x);
  const double x_t = side == Side::Left ? g.x_minus : g.x_plus;
  const double inward = side == Side::Left ? x - x_t : x_t - x;
  if (std::abs(inward) < kTurningWindow * g.width()) {
    // Linearised potential: z = (2m|v'|/hbar^2)^(1/3) d and z^(1/4)/sqrt(p)
    // tends to (2m|v'| hbar)^(-1/6).
    const double force = std::abs(sys.potential.derivative(x_t));
    const double z = std::cbrt(2.0 * sys.mass * force / (sys.hbar * sys.hbar)) * inward;
    return std::sqrt(2.0 * sys.mass * orbit.omega) *
           std::pow(2.0 * sys.mass * force * sys.hbar, -1.0 / 6.0) * airy_ai(-z);
  }
  const LangerPoint lp = z_of(sys, orbit, x);
  const double p = momentum(sys.potential, x, orbit.energy, sys.mass).magnitude;
  return std::sqrt(2.0 * sys.mass * orbit.omega / p) * std::sqrt(std::sqrt(std::abs(lp.z))) *
         airy_ai(-lp.z);
}

double langer_wavefunction(const QuantumSystem& sys, double x, double energy) {
  return langer_wavefunction(sys, langer_orbit(sys, energy), x);
}

}  // namespace fermi1d
