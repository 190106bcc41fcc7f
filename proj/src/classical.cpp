#include "fermi1d/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fermi1d/error.hpp"
#include "fermi1d/numerics.hpp"

namespace fermi1d {

const char* to_string(Region r) {
  switch (r) {
    case Region::Allowed:
      return "allowed";
    case Region::Forbidden:
      return "forbidden";
    case Region::Turning:
      return "turning";
  }
  return "?";
}

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

// Scans outward from the minimum in geometric steps until v >= E.
double bracket_root(const PotentialModel& pot, double energy, double direction) {
  const double x0 = pot.vmin_location();
  double step = 1e-3 * pot.length_scale();
  double inner = x0;
  for (int i = 0; i < 200; ++i) {
    const double outer = x0 + direction * step;
    if (pot.value(outer) >= energy) {
      auto f = [&](double x) { return pot.value(x) - energy; };
      return direction > 0 ? numerics::find_root(f, inner, outer, "turning_points")
                           : numerics::find_root(f, outer, inner, "turning_points");
    }
    inner = outer;
    step *= 1.5;
  }
  throw NoBoundOrbit("turning_points: v(x) never reaches E=" + std::to_string(energy));
}

// Integral of g over a distance `length` from a turning point, written in
// u with x = x_t + dir u^2 to remove the square-root behaviour at x_t. The
// integrand passed to the quadrature is 2 u g(u).
template <class G>
double from_turning(G&& g, double length, const char* what) {
  if (length <= 0.0) return 0.0;
  auto h = [&](double u) { return 2.0 * u * g(u); };
  return numerics::integrate(h, 0.0, std::sqrt(length), what);
}

// Integrand kind: p (action) or m/p (time of flight).
enum class Integrand { Action, Time };

// Squared momentum at x_t + dir u^2: 2m|v - E|, with v - E taken as the
// rise of v from the turning point so that nothing cancels near x_t.
struct Kinetic {
  const PotentialModel& pot;
  double mass;
  double x_t;
  double dir;
  double slope;  // |v'(x_t)|
  bool forbidden;

  double p2(double u) const {
    const double d = dir * u * u;
    double q = pot.rise(x_t, d);
    if (!forbidden) q = -q;
    if (!(q > 0.0)) q = slope * u * u;
    return 2.0 * mass * q;
  }
};

double segment(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
               double mass, Integrand kind, bool forbidden) {
  const double x_t = side == Side::Left ? geom.x_minus : geom.x_plus;
  const double dir = (side == Side::Left) != forbidden ? 1.0 : -1.0;
  const Kinetic k{pot, mass, x_t, dir, std::abs(pot.derivative(x_t)), forbidden};
  const double length = std::abs(x - x_t);
  if (kind == Integrand::Action) {
    return from_turning([&](double u) { return std::sqrt(k.p2(u)); }, length, "action");
  }
  return from_turning([&](double u) { return mass / std::sqrt(k.p2(u)); }, length, "traversal_time");
}

// Allowed-region integral from the anchor to x, splitting at the orbit
// midpoint so each piece only sees the singularity of its own turning point.
double allowed_from(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
                    double mass, Integrand kind) {
  const double mid = 0.5 * (geom.x_minus + geom.x_plus);
  const Side other = side == Side::Left ? Side::Right : Side::Left;
  const bool near_half = side == Side::Left ? x <= mid : x >= mid;
  if (near_half) return segment(pot, geom, side, x, mass, kind, false);
  return segment(pot, geom, side, mid, mass, kind, false) +
         segment(pot, geom, other, mid, mass, kind, false) -
         segment(pot, geom, other, x, mass, kind, false);
}

double anchored(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
                double mass, Integrand kind) {
  if (side == Side::Left) {
    if (x > geom.x_plus) throw std::domain_error("left-anchored integral beyond x_plus");
    if (x < geom.x_minus) return segment(pot, geom, side, x, mass, kind, true);
  } else {
    if (x < geom.x_minus) throw std::domain_error("right-anchored integral beyond x_minus");
    if (x > geom.x_plus) return segment(pot, geom, side, x, mass, kind, true);
  }
  return allowed_from(pot, geom, side, x, mass, kind);
}

}  // namespace

TurningGeometry turning_points(const PotentialModel& pot, double energy) {
  if (!(energy > pot.vmin_value())) {
    throw NoBoundOrbit("turning_points: E=" + std::to_string(energy) +
                       " is not above the potential minimum");
  }
  if (!(energy < pot.sup_value())) {
    throw NoBoundOrbit("turning_points: E=" + std::to_string(energy) +
                       " is not below the binding limit " + std::to_string(pot.sup_value()));
  }
  TurningGeometry g;
  g.energy = energy;
  g.x_minus = bracket_root(pot, energy, -1.0);
  g.x_plus = bracket_root(pot, energy, +1.0);
  // A simple root has |v'| |x_t - x_min| comparable to E - vmin.
  const double scale = energy - pot.vmin_value();
  for (double x_t : {g.x_minus, g.x_plus}) {
    if (std::abs(pot.derivative(x_t)) * std::abs(x_t - pot.vmin_location()) < 1e-8 * scale) {
      throw DegenerateTurningPoint("turning_points: v'(x) vanishes at x=" + std::to_string(x_t));
    }
  }
  if (!(pot.derivative(g.x_minus) < 0.0 && pot.derivative(g.x_plus) > 0.0)) {
    throw DegenerateTurningPoint("turning_points: roots do not bracket a single well");
  }
  return g;
}

MomentumValue momentum(const PotentialModel& pot, double x, double energy, double mass) {
  const double diff = energy - pot.value(x);
  if (std::abs(diff) <= 1e-14 * std::max(1.0, std::abs(energy))) return {0.0, Region::Turning};
  return {std::sqrt(2.0 * mass * std::abs(diff)), diff > 0.0 ? Region::Allowed : Region::Forbidden};
}

double action_from(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
                   double mass) {
  return anchored(pot, geom, side, x, mass, Integrand::Action);
}

double time_from(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
                 double mass) {
  return anchored(pot, geom, side, x, mass, Integrand::Time);
}

double matching_point(const PotentialModel& pot, const TurningGeometry& geom, double mass) {
  auto g = [&](double x) {
    return action_from(pot, geom, Side::Left, x, mass) - action_from(pot, geom, Side::Right, x, mass);
  };
  return numerics::find_root(g, geom.x_minus, geom.x_plus, "matching_point");
}

double matching_point(const PotentialModel& pot, double energy, double mass) {
  return matching_point(pot, turning_points(pot, energy), mass);
}

TurningGeometry with_match(const PotentialModel& pot, TurningGeometry geom, double mass) {
  geom.x_match = matching_point(pot, geom, mass);
  return geom;
}

Side anchor_side(const TurningGeometry& geom, double x) {
  return x <= geom.x_match.value() ? Side::Left : Side::Right;
}

ActionValue action(const PotentialModel& pot, const TurningGeometry& geom, double x, double mass) {
  const Side side = anchor_side(geom, x);
  ActionValue out;
  out.side = side;
  out.magnitude = action_from(pot, geom, side, x, mass);
  const double x_t = side == Side::Left ? geom.x_minus : geom.x_plus;
  if (x == x_t) {
    out.region = Region::Turning;
  } else {
    const bool outside = side == Side::Left ? x < x_t : x > x_t;
    out.region = outside ? Region::Forbidden : Region::Allowed;
  }
  return out;
}

ActionValue action(const PotentialModel& pot, double x, double energy, double mass) {
  return action(pot, with_match(pot, turning_points(pot, energy), mass), x, mass);
}

double full_action(const PotentialModel& pot, double energy, double mass) {
  const TurningGeometry g = turning_points(pot, energy);
  const double mid = 0.5 * (g.x_minus + g.x_plus);
  return 2.0 * (segment(pot, g, Side::Left, mid, mass, Integrand::Action, false) +
                segment(pot, g, Side::Right, mid, mass, Integrand::Action, false));
}

double frequency(const PotentialModel& pot, double energy, double mass) {
  const double h = 1e-5 * std::max(1.0, std::abs(energy));
  const double lo = pot.vmin_value();
  const double hi = pot.sup_value();
  if (!(energy > lo && energy < hi)) {
    throw NoBoundOrbit("frequency: E=" + std::to_string(energy) + " outside the bound range");
  }
  double slope = 0.0;
  auto I = [&](double e) { return full_action(pot, e, mass); };
  if (energy - h > lo && energy + h < hi) {
    slope = (I(energy + h) - I(energy - h)) / (2.0 * h);
  } else if (energy - h <= lo) {
    slope = (-3.0 * I(energy) + 4.0 * I(energy + h) - I(energy + 2.0 * h)) / (2.0 * h);
  } else {
    slope = (3.0 * I(energy) - 4.0 * I(energy - h) + I(energy - 2.0 * h)) / (2.0 * h);
  }
  return 2.0 * std::numbers::pi / slope;
}

double traversal_time(const PotentialModel& pot, double x, double energy, double mass) {
  const TurningGeometry g = turning_points(pot, energy);
  if (x > g.x_plus) return time_from(pot, g, Side::Right, x, mass);
  return time_from(pot, g, Side::Left, x, mass);
}

}  // namespace fermi1d
