#pragma once

#include "fermi1d/classical.hpp"
#include "fermi1d/quantize.hpp"

namespace fermi1d {

/// Signed Langer variable at one position: z > 0 inside the well, z < 0
/// outside, z = 0 at the anchoring turning point.
struct LangerPoint {
  double z = 0.0;
  double s_magnitude = 0.0;
  Side side = Side::Left;
  Region region = Region::Allowed;
};

/// Orbit data needed to evaluate Langer orbitals at one energy.
struct LangerOrbit {
  double energy = 0.0;
  TurningGeometry geometry;  // with x_match
  double omega = 0.0;
};

LangerOrbit langer_orbit(const QuantumSystem& sys, double energy);

LangerPoint z_of(const QuantumSystem& sys, const LangerOrbit& orbit, double x);
LangerPoint z_of(const QuantumSystem& sys, double x, double energy);

/// Half-width of the window around each turning point in which values are
/// taken from the linearised potential, as a fraction of x_+ - x_-.
inline constexpr double kTurningWindow = 1e-6;

/// Langer orbital sqrt(2 m omega / |p|) |z|^(1/4) Ai(-z), with z the signed
/// variable above (so the Airy argument is +|z| outside the well).
double langer_wavefunction(const QuantumSystem& sys, const LangerOrbit& orbit, double x);
double langer_wavefunction(const QuantumSystem& sys, double x, double energy);

}  // namespace fermi1d
