#include "fermi1d/potential.hpp"

#include <cmath>

#include "fermi1d/error.hpp"

namespace fermi1d {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("potential parameter ") + what + " must be positive and finite");
  }
}

}  // namespace

PotentialModel::PotentialModel(Kind kind, std::string name, ParamMap params)
    : kind_(kind), name_(std::move(name)), params_(std::move(params)) {}

PotentialModel PotentialModel::harmonic(double omega) {
  require_positive(omega, "omega");
  PotentialModel m(Kind::Harmonic, "harmonic", {{"omega", omega}});
  m.p0_ = omega;
  return m;
}

PotentialModel PotentialModel::morse(double depth, double range) {
  require_positive(depth, "D");
  require_positive(range, "a");
  PotentialModel m(Kind::Morse, "morse", {{"D", depth}, {"a", range}});
  m.p0_ = depth;
  m.p1_ = range;
  return m;
}

PotentialModel PotentialModel::quartic(double c4, double c2) {
  if (!(c4 >= 0.0) || !(c2 >= 0.0) || !(c4 > 0.0 || c2 > 0.0)) {
    throw ConfigError("quartic potential needs c4 >= 0, c2 >= 0, not both zero");
  }
  PotentialModel m(Kind::Quartic, "quartic", {{"c4", c4}, {"c2", c2}});
  m.p0_ = c4;
  m.p1_ = c2;
  return m;
}

PotentialModel PotentialModel::poschl_teller(double depth, double range) {
  require_positive(depth, "D");
  require_positive(range, "a");
  PotentialModel m(Kind::PoschlTeller, "poschl_teller", {{"D", depth}, {"a", range}});
  m.p0_ = depth;
  m.p1_ = range;
  return m;
}

double PotentialModel::value(double x) const {
  switch (kind_) {
    case Kind::Harmonic:
      return 0.5 * p0_ * p0_ * x * x;
    case Kind::Morse: {
      const double u = -std::expm1(-p1_ * x);
      return p0_ * u * u;
    }
    case Kind::Quartic: {
      const double x2 = x * x;
      return p0_ * x2 * x2 + p1_ * x2;
    }
    case Kind::PoschlTeller: {
      const double t = std::tanh(p1_ * x);
      return p0_ * t * t;
    }
  }
  return 0.0;
}

double PotentialModel::derivative(double x) const {
  switch (kind_) {
    case Kind::Harmonic:
      return p0_ * p0_ * x;
    case Kind::Morse: {
      const double e = std::exp(-p1_ * x);
      return 2.0 * p0_ * p1_ * (1.0 - e) * e;
    }
    case Kind::Quartic:
      return 4.0 * p0_ * x * x * x + 2.0 * p1_ * x;
    case Kind::PoschlTeller: {
      const double t = std::tanh(p1_ * x);
      return 2.0 * p0_ * p1_ * t * (1.0 - t * t);
    }
  }
  return 0.0;
}

double PotentialModel::rise(double x0, double d) const {
  const double x1 = x0 + d;
  switch (kind_) {
    case Kind::Harmonic:
      return 0.5 * p0_ * p0_ * d * (2.0 * x0 + d);
    case Kind::Morse: {
      // u = 1 - exp(-a x); u(x1) - u(x0) = -exp(-a x0) expm1(-a d)
      const double du = -std::exp(-p1_ * x0) * std::expm1(-p1_ * d);
      return p0_ * du * (-std::expm1(-p1_ * x1) - std::expm1(-p1_ * x0));
    }
    case Kind::Quartic: {
      const double dsq = d * (2.0 * x0 + d);
      return dsq * (p0_ * (x1 * x1 + x0 * x0) + p1_);
    }
    case Kind::PoschlTeller: {
      if (std::abs(p1_ * x0) > 300.0 || std::abs(p1_ * x1) > 300.0) return value(x1) - value(x0);
      const double dt = std::sinh(p1_ * d) / (std::cosh(p1_ * x1) * std::cosh(p1_ * x0));
      return p0_ * dt * (std::tanh(p1_ * x1) + std::tanh(p1_ * x0));
    }
  }
  return value(x1) - value(x0);
}

double PotentialModel::sup_value() const {
  switch (kind_) {
    case Kind::Morse:
    case Kind::PoschlTeller:
      return p0_;
    default:
      return std::numeric_limits<double>::infinity();
  }
}

double PotentialModel::length_scale() const {
  switch (kind_) {
    case Kind::Harmonic:
      return 1.0 / p0_;
    case Kind::Morse:
    case Kind::PoschlTeller:
      return 1.0 / p1_;
    case Kind::Quartic:
      return p1_ > 0.0 ? 1.0 / std::sqrt(p1_) : 1.0 / std::sqrt(std::sqrt(p0_));
  }
  return 1.0;
}

std::vector<std::string> builtin_potential_names() {
  return {"harmonic", "morse", "quartic", "poschl_teller"};
}

PotentialModel make_potential(std::string_view name, const ParamMap& params) {
  auto take = [&](std::initializer_list<std::pair<const char*, double>> defaults) {
    for (const auto& [key, _] : params) {
      bool known = false;
      for (const auto& [k, __] : defaults) known = known || key == k;
      if (!known) {
        throw ConfigError("unknown parameter '" + key + "' for potential '" + std::string(name) + "'");
      }
    }
    std::vector<double> out;
    for (const auto& [k, d] : defaults) {
      auto it = params.find(k);
      out.push_back(it == params.end() ? d : it->second);
    }
    return out;
  };

  if (name == "harmonic") {
    auto v = take({{"omega", 1.0}});
    return PotentialModel::harmonic(v[0]);
  }
  if (name == "morse") {
    auto v = take({{"D", 12.5}, {"a", 0.5}});
    return PotentialModel::morse(v[0], v[1]);
  }
  if (name == "quartic") {
    auto v = take({{"c4", 0.25}, {"c2", 0.5}});
    return PotentialModel::quartic(v[0], v[1]);
  }
  if (name == "poschl_teller") {
    auto v = take({{"D", 12.5}, {"a", 0.5}});
    return PotentialModel::poschl_teller(v[0], v[1]);
  }
  std::string msg = "unknown potential '" + std::string(name) + "'; built-ins are:";
  for (const auto& n : builtin_potential_names()) msg += " " + n;
  throw ConfigError(msg);
}

}  // namespace fermi1d
