#pragma once

#include <optional>

#include "fermi1d/potential.hpp"

namespace fermi1d {

enum class Region { Allowed, Forbidden, Turning };
enum class Side { Left, Right };

const char* to_string(Region r);
const char* to_string(Side s);

/// Turning points of the classical orbit at `energy`; `x_match` is filled
/// in by matching_point() (or with_match()).
struct TurningGeometry {
  double energy = 0.0;
  double x_minus = 0.0;
  double x_plus = 0.0;
  std::optional<double> x_match;

  double width() const { return x_plus - x_minus; }
};

struct MomentumValue {
  double magnitude = 0.0;
  Region region = Region::Allowed;
};

struct ActionValue {
  double magnitude = 0.0;
  Side side = Side::Left;
  Region region = Region::Allowed;
};

/// The two simple roots of v(x) = E bracketing the well minimum.
/// Throws NoBoundOrbit if E is not strictly inside (vmin, sup v), and
/// DegenerateTurningPoint if v' is (numerically) zero at a root.
TurningGeometry turning_points(const PotentialModel& pot, double energy);

/// |p| = sqrt(2m|E - v|) tagged with the region; Turning (and 0) when
/// |E - v| <= 1e-14 max(1, |E|).
MomentumValue momentum(const PotentialModel& pot, double x, double energy, double mass = 1.0);

/// Action magnitude measured from the turning point on `side` toward x.
/// Inside the well this is the integral of p; outside (x beyond that turning
/// point) it is the integral of |p| back to the turning point. For the left
/// anchor x may range over (-inf, x_plus]; symmetric for the right.
double action_from(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
                   double mass = 1.0);

/// Classical time of flight m/p integrated from the turning point on `side`
/// toward x (|p| in the forbidden region, giving the imaginary-time magnitude).
double time_from(const PotentialModel& pot, const TurningGeometry& geom, Side side, double x,
                 double mass = 1.0);

/// x_m with S(x_m, x_-) = S(x_+, x_m) = S(x_+, x_-)/2.
double matching_point(const PotentialModel& pot, const TurningGeometry& geom, double mass = 1.0);
double matching_point(const PotentialModel& pot, double energy, double mass = 1.0);

/// Copy of `geom` with x_match computed.
TurningGeometry with_match(const PotentialModel& pot, TurningGeometry geom, double mass = 1.0);

/// Side whose Langer anchor applies at x (Left iff x <= x_match).
Side anchor_side(const TurningGeometry& geom, double x);

/// Action at x from the anchoring turning point (left for x <= x_m).
ActionValue action(const PotentialModel& pot, double x, double energy, double mass = 1.0);
ActionValue action(const PotentialModel& pot, const TurningGeometry& geom, double x,
                   double mass = 1.0);

/// Closed-orbit action I(E) = 2 S(x_+, x_-, E).
double full_action(const PotentialModel& pot, double energy, double mass = 1.0);

/// omega(E) = 2 pi / (dI/dE), dI/dE by centred differences with step
/// 1e-5 max(1, |E|) (one-sided next to the ends of the bound range).
double frequency(const PotentialModel& pot, double energy, double mass = 1.0);

/// Time of flight from x_- to x (allowed) or from x to x_- (x < x_-).
double traversal_time(const PotentialModel& pot, double x, double energy, double mass = 1.0);

}  // namespace fermi1d
