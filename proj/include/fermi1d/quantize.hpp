#pragma once

#include <utility>
#include <vector>

#include "fermi1d/classical.hpp"
#include "fermi1d/potential.hpp"

namespace fermi1d {

/// N singly occupied levels of a potential, with the Fermi-level quantities
/// (taken at quantum number N - 1/2) cached at construction.
struct QuantumSystem {
  PotentialModel potential;
  double hbar = 1.0;
  double mass = 1.0;
  int n_particles = 1;
  double fermi_energy = 0.0;
  TurningGeometry fermi_geometry;  // x_match filled in
  double omega_f = 0.0;
};

struct SpectrumTable {
  std::vector<std::pair<double, double>> entries;  // (lambda, E)
};

/// Energy with I(E) = 2 pi hbar (lambda + 1/2). Throws SpectrumOverflow if no
/// bound energy reaches that action.
double wkb_energy(const PotentialModel& pot, double hbar, double lambda, double mass = 1.0);

SpectrumTable wkb_spectrum(const PotentialModel& pot, double hbar, const std::vector<double>& lambdas,
                           double mass = 1.0);

QuantumSystem build_system(const PotentialModel& pot, double hbar, double mass, int n_particles);

/// hbar -> gamma hbar, N -> N / gamma. Throws NonIntegerParticleNumber unless
/// N / gamma is an integer; gamma must lie in (0, 1].
QuantumSystem gamma_scale(const QuantumSystem& sys, double gamma);

}  // namespace fermi1d
