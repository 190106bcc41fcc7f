#pragma once

#include "fermi1d/classical.hpp"
#include "fermi1d/quantize.hpp"

namespace fermi1d {

/// Angle omega_F * tau. Outside the well the angle is imaginary and only its
/// magnitude is stored, tagged Forbidden.
struct AngleValue {
  double magnitude = 0.0;
  Region region = Region::Allowed;
};

/// Everything that enters the uniform density and KED at one position, all
/// at the Fermi energy. Outside the well z_f < 0 and ai, ai_prime are Ai and
/// Ai' at +|z_f|.
struct SemiclassicalTerms {
  double x = 0.0;
  Side side = Side::Left;
  MomentumValue p_f;
  double s_f = 0.0;
  double z_f = 0.0;
  AngleValue alpha_f;
  double ai = 0.0;
  double ai_prime = 0.0;
  double n_leading = 0.0;
  double n_correction = 0.0;
  double t_leading = 0.0;
  double t_correction = 0.0;

  double density() const { return n_leading + n_correction; }
  double ked() const { return t_leading + t_correction; }
};

/// (hbar^2 / (2 m |v'(x_+)|))^(1/3), the Airy length at the right turning point.
double turning_length(const QuantumSystem& sys);

/// Terms at x with the anchor chosen by the matching point. Inside the
/// turning-point window the fields are linear interpolations between the
/// window edges.
SemiclassicalTerms semiclassical_terms(const QuantumSystem& sys, double x);

/// Terms with the anchor forced to `side`, without any window treatment.
/// Used for one-sided derivatives at the matching point.
SemiclassicalTerms semiclassical_terms(const QuantumSystem& sys, double x, Side side);

AngleValue alpha_f(const QuantumSystem& sys, double x);

double density_uniform(const QuantumSystem& sys, double x);
double density_leading(const QuantumSystem& sys, double x);
double density_correction(const QuantumSystem& sys, double x);
double ked_uniform(const QuantumSystem& sys, double x);
double ked_leading(const QuantumSystem& sys, double x);
double ked_correction(const QuantumSystem& sys, double x);

/// p_F / (pi hbar) and p_F^3 / (6 pi hbar m) inside the well, 0 outside.
double density_tf(const QuantumSystem& sys, double x);
double ked_tf(const QuantumSystem& sys, double x);

/// Region used for error breakdowns: Turning within 3 turning_length of
/// either turning point, otherwise by the sign of E_F - v.
Region classify(const QuantumSystem& sys, double x);

/// Closed-form estimates of n and t for the region containing x. `printed`
/// are the forms as usually quoted; `leading` differ only outside the well,
/// where they keep the csch term alone (the quoted forms there are
/// negative). Inside the well both hold the same values.
struct RegionalEstimate {
  Region region = Region::Allowed;
  double n_printed = 0.0;
  double t_printed = 0.0;
  double n_leading = 0.0;
  double t_leading = 0.0;
};

RegionalEstimate regional_asymptotics(const QuantumSystem& sys, double x);

/// Value of n at a turning point: Gamma(1/3)^-2 (2 m |v'| / (9 hbar^2))^(1/3).
double turning_point_density(const QuantumSystem& sys, double x_t);
/// Value of t at a turning point: -|v'| / (9 Gamma(1/3) Gamma(2/3)).
double turning_point_ked(const QuantumSystem& sys, double x_t);

/// Jump of dn/dx at the matching point relative to n(x_m): closed form
/// m omega_F / (9 N p_F(x_m)) and the value measured with one-sided
/// second-order differences.
struct DerivativeJump {
  double predicted = 0.0;
  double measured = 0.0;
  double ratio() const { return measured / predicted; }
};

DerivativeJump derivative_jump_estimate(const QuantumSystem& sys);

}  // namespace fermi1d
