#include "fermi1d/uniform.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fermi1d/airy.hpp"
#include "fermi1d/error.hpp"
#include "fermi1d/langer.hpp"

namespace fermi1d {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

double real_part(Complex c, const char* what) {
  if (std::abs(c.imag()) > 1e-9 * std::abs(c.real())) {
    throw ComplexResidual(std::string(what) + ": imaginary residue " + std::to_string(c.imag()) +
                          " against real part " + std::to_string(c.real()));
  }
  return c.real();
}

// r e^{i k pi/2}, built exactly so that no rounding leaks between parts.
Complex on_branch(double r, int quarter_turns) {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 0:
      return {r, 0.0};
    case 1:
      return {0.0, r};
    case 2:
      return {-r, 0.0};
    default:
      return {0.0, -r};
  }
}

double turning_of(const TurningGeometry& g, Side side) { return side == Side::Left ? g.x_minus : g.x_plus; }

// Allowed region: everything is real.
void fill_allowed(const QuantumSystem& sys, SemiclassicalTerms& t) {
  const double m = sys.mass;
  const double w = sys.omega_f;
  const double p = t.p_f.magnitude;
  const double z = t.z_f;
  const double a = t.alpha_f.magnitude;
  const double sz = std::sqrt(z);
  const double ab = t.ai * t.ai_prime;
  const double core = sz * t.ai * t.ai + t.ai_prime * t.ai_prime / sz - ab / (2.0 * z * sz);
  t.n_leading = p / sys.hbar * core + m * w / (a * p) * ab;
  t.n_correction = m * w / p * xi0(a) * ab;
  t.t_leading = p * p * t.n_leading / (6.0 * m) + p * w * ab / (3.0 * a);
  t.t_correction = p * p * t.n_correction / (2.0 * m);
}

// Outside the well the same expressions are continued onto the branch
// p = i|p|, z = e^{i pi}|z| (so sqrt z = i sqrt|z|, z^{3/2} = -i |z|^{3/2}),
// alpha = i|alpha|, and the results must come out real.
void fill_forbidden(const QuantumSystem& sys, SemiclassicalTerms& t) {
  const double m = sys.mass;
  const double w = sys.omega_f;
  const double az = -t.z_f;
  const double aa = t.alpha_f.magnitude;
  const Complex p = on_branch(t.p_f.magnitude, 1);
  const Complex sz = on_branch(std::sqrt(az), 1);
  const Complex z32 = on_branch(az * std::sqrt(az), 3);
  const Complex alpha = on_branch(aa, 1);
  const Complex xi(0.0, -xi0_hyperbolic(aa));  // csc(i a) - 1/(i a)
  const double ab = t.ai * t.ai_prime;
  const Complex core = sz * t.ai * t.ai + t.ai_prime * t.ai_prime / sz - ab / (2.0 * z32);
  const Complex n_lead = p / sys.hbar * core + m * w / (alpha * p) * ab;
  const Complex n_corr = m * w / p * xi * ab;
  const Complex t_lead = p * p * n_lead / (6.0 * m) + p * w * ab / (3.0 * alpha);
  const Complex t_corr = p * p * n_corr / (2.0 * m);
  t.n_leading = real_part(n_lead, "density_leading");
  t.n_correction = real_part(n_corr, "density_correction");
  t.t_leading = real_part(t_lead, "ked_leading");
  t.t_correction = real_part(t_corr, "ked_correction");
}

SemiclassicalTerms raw_terms(const QuantumSystem& sys, double x, Side side) {
  const PotentialModel& pot = sys.potential;
  const TurningGeometry& g = sys.fermi_geometry;
  SemiclassicalTerms t;
  t.x = x;
  t.side = side;
  const double x_t = turning_of(g, side);
  const bool outside = side == Side::Left ? x < x_t : x > x_t;
  t.p_f = momentum(pot, x, g.energy, sys.mass);
  t.p_f.region = outside ? Region::Forbidden : Region::Allowed;
  t.s_f = action_from(pot, g, side, x, sys.mass);
  t.alpha_f = {sys.omega_f * time_from(pot, g, side, x, sys.mass), t.p_f.region};
  const double mag = std::pow(1.5 * t.s_f / sys.hbar, 2.0 / 3.0);
  t.z_f = outside ? -mag : mag;
  const AiryPair ai = airy(outside ? mag : -mag);
  t.ai = ai.ai;
  t.ai_prime = ai.ai_prime;
  if (outside) fill_forbidden(sys, t);
  else fill_allowed(sys, t);
  return t;
}

SemiclassicalTerms blend(const SemiclassicalTerms& a, const SemiclassicalTerms& b, double w) {
  auto mix = [w](double u, double v) { return (1.0 - w) * u + w * v; };
  SemiclassicalTerms t = a;
  t.p_f.magnitude = mix(a.p_f.magnitude, b.p_f.magnitude);
  t.s_f = mix(a.s_f, b.s_f);
  t.z_f = mix(a.z_f, b.z_f);
  t.alpha_f.magnitude = mix(a.alpha_f.magnitude, b.alpha_f.magnitude);
  t.ai = mix(a.ai, b.ai);
  t.ai_prime = mix(a.ai_prime, b.ai_prime);
  t.n_leading = mix(a.n_leading, b.n_leading);
  t.n_correction = mix(a.n_correction, b.n_correction);
  t.t_leading = mix(a.t_leading, b.t_leading);
  t.t_correction = mix(a.t_correction, b.t_correction);
  return t;
}

}  // namespace

double turning_length(const QuantumSystem& sys) {
  const double force = std::abs(sys.potential.derivative(sys.fermi_geometry.x_plus));
  return std::cbrt(sys.hbar * sys.hbar / (2.0 * sys.mass * force));
}

SemiclassicalTerms semiclassical_terms(const QuantumSystem& sys, double x, Side side) {
  return raw_terms(sys, x, side);
}

SemiclassicalTerms semiclassical_terms(const QuantumSystem& sys, double x) {
  const TurningGeometry& g = sys.fermi_geometry;
  const Side side = anchor_side(g, x);
  const double x_t = turning_of(g, side);
  const double delta = kTurningWindow * g.width();
  if (std::abs(x - x_t) < delta) {
    // The expressions are 0/0-indeterminate at x_t; interpolate across.
    const SemiclassicalTerms lo = raw_terms(sys, x_t - delta, side);
    const SemiclassicalTerms hi = raw_terms(sys, x_t + delta, side);
    SemiclassicalTerms t = blend(lo, hi, (x - (x_t - delta)) / (2.0 * delta));
    t.x = x;
    if (x == x_t) {
      t.p_f.region = Region::Turning;
      t.alpha_f.region = Region::Turning;
    } else {
      const bool outside = side == Side::Left ? x < x_t : x > x_t;
      t.p_f.region = t.alpha_f.region = outside ? Region::Forbidden : Region::Allowed;
    }
    return t;
  }
  return raw_terms(sys, x, side);
}

AngleValue alpha_f(const QuantumSystem& sys, double x) {
  const TurningGeometry& g = sys.fermi_geometry;
  const Side side = anchor_side(g, x);
  const double x_t = turning_of(g, side);
  if (x == x_t) return {0.0, Region::Turning};
  const bool outside = side == Side::Left ? x < x_t : x > x_t;
  return {sys.omega_f * time_from(sys.potential, g, side, x, sys.mass),
          outside ? Region::Forbidden : Region::Allowed};
}

double density_uniform(const QuantumSystem& sys, double x) { return semiclassical_terms(sys, x).density(); }
double density_leading(const QuantumSystem& sys, double x) { return semiclassical_terms(sys, x).n_leading; }
double density_correction(const QuantumSystem& sys, double x) {
  return semiclassical_terms(sys, x).n_correction;
}
double ked_uniform(const QuantumSystem& sys, double x) { return semiclassical_terms(sys, x).ked(); }
double ked_leading(const QuantumSystem& sys, double x) { return semiclassical_terms(sys, x).t_leading; }
double ked_correction(const QuantumSystem& sys, double x) { return semiclassical_terms(sys, x).t_correction; }

double density_tf(const QuantumSystem& sys, double x) {
  const MomentumValue p = momentum(sys.potential, x, sys.fermi_energy, sys.mass);
  return p.region == Region::Allowed ? p.magnitude / (kPi * sys.hbar) : 0.0;
}

double ked_tf(const QuantumSystem& sys, double x) {
  const MomentumValue p = momentum(sys.potential, x, sys.fermi_energy, sys.mass);
  if (p.region != Region::Allowed) return 0.0;
  return p.magnitude * p.magnitude * p.magnitude / (6.0 * kPi * sys.hbar * sys.mass);
}

Region classify(const QuantumSystem& sys, double x) {
  const TurningGeometry& g = sys.fermi_geometry;
  const double band = 3.0 * turning_length(sys);
  if (std::abs(x - g.x_minus) < band || std::abs(x - g.x_plus) < band) return Region::Turning;
  return sys.potential.value(x) > sys.fermi_energy ? Region::Forbidden : Region::Allowed;
}

double turning_point_density(const QuantumSystem& sys, double x_t) {
  const double force = std::abs(sys.potential.derivative(x_t));
  const double g13 = std::tgamma(1.0 / 3.0);
  return std::cbrt(2.0 * sys.mass * force / (9.0 * sys.hbar * sys.hbar)) / (g13 * g13);
}

double turning_point_ked(const QuantumSystem& sys, double x_t) {
  const double force = std::abs(sys.potential.derivative(x_t));
  return -force / (9.0 * std::tgamma(1.0 / 3.0) * std::tgamma(2.0 / 3.0));
}

RegionalEstimate regional_asymptotics(const QuantumSystem& sys, double x) {
  RegionalEstimate r;
  r.region = classify(sys, x);
  const TurningGeometry& g = sys.fermi_geometry;
  if (r.region == Region::Turning) {
    const double x_t = std::abs(x - g.x_minus) < std::abs(x - g.x_plus) ? g.x_minus : g.x_plus;
    r.n_printed = r.n_leading = turning_point_density(sys, x_t);
    r.t_printed = r.t_leading = turning_point_ked(sys, x_t);
    return r;
  }
  const SemiclassicalTerms t = semiclassical_terms(sys, x);
  const double m = sys.mass;
  const double w = sys.omega_f;
  const double h = sys.hbar;
  const double p = t.p_f.magnitude;
  const double s = t.s_f;
  const double a = t.alpha_f.magnitude;
  if (r.region == Region::Allowed) {
    const double c = std::cos(2.0 * s / h);
    r.n_printed = p / (kPi * h) - m * w * c / (2.0 * kPi * p * std::sin(a));
    r.t_printed = p * p * p / (6.0 * kPi * h * m) - w * p * c / (4.0 * kPi * std::sin(a));
    r.n_leading = r.n_printed;
    r.t_leading = r.t_printed;
    return r;
  }
  const double decay = std::exp(-2.0 * s / h);
  const double csch = 1.0 / std::sinh(a);
  r.n_printed = decay * (m * w / (4.0 * kPi * p * a) - p / (6.0 * kPi * s)) +
                m * w * decay * xi0_hyperbolic(a) / (4.0 * kPi * p);
  r.t_printed = (2.0 * p * p * p / (3.0 * m * s) - 3.0 * w * p * csch) * decay / (24.0 * kPi);
  r.n_leading = m * w * csch * decay / (4.0 * kPi * p);
  r.t_leading = -w * p * csch * decay / (8.0 * kPi);
  return r;
}

DerivativeJump derivative_jump_estimate(const QuantumSystem& sys) {
  const double x_m = sys.fermi_geometry.x_match.value();
  const double p_m = momentum(sys.potential, x_m, sys.fermi_energy, sys.mass).magnitude;
  DerivativeJump j;
  j.predicted = sys.mass * sys.omega_f / (9.0 * sys.n_particles * p_m);
  const double h = 1e-3 * sys.hbar / p_m;
  auto n = [&](double x, Side side) { return semiclassical_terms(sys, x, side).density(); };
  const double n_left = n(x_m, Side::Left);
  const double n_right = n(x_m, Side::Right);
  const double d_left = (3.0 * n_left - 4.0 * n(x_m - h, Side::Left) + n(x_m - 2.0 * h, Side::Left)) / (2.0 * h);
  const double d_right =
      (-3.0 * n_right + 4.0 * n(x_m + h, Side::Right) - n(x_m + 2.0 * h, Side::Right)) / (2.0 * h);
  j.measured = std::abs(d_right - d_left) / (0.5 * (n_left + n_right));
  return j;
}

}  // namespace fermi1d
