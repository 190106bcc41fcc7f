#include "fermi1d/profile.hpp"

#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>

#include "fermi1d/error.hpp"
#include "fermi1d/numerics.hpp"
#include "fermi1d/reference.hpp"
#include "fermi1d/uniform.hpp"

namespace fermi1d {

const char* to_string(Method m) {
  switch (m) {
    case Method::Uniform:
      return "uniform";
    case Method::TF:
      return "tf";
    case Method::Exact:
      return "exact";
    case Method::LangerSum:
      return "langer_sum";
  }
  return "?";
}

const char* to_string(Quantity q) { return q == Quantity::Density ? "density" : "ked"; }

Method parse_method(const std::string& name) {
  for (Method m : {Method::Uniform, Method::TF, Method::Exact, Method::LangerSum}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("unknown method '" + name + "'; expected uniform, tf, exact or langer_sum");
}

double DensityProfile::integral() const { return numerics::trapezoid(xs, values); }

DensityProfile profile(const QuantumSystem& sys, const std::vector<double>& xs, Method method,
                       Quantity quantity) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("profile: grid must be strictly increasing");
  }
  const bool density = quantity == Quantity::Density;
  std::function<double(double)> f;
  std::optional<ExactOracle> exact;
  std::optional<LangerSum> langer;
  switch (method) {
    case Method::Uniform:
      f = [&](double x) { return density ? density_uniform(sys, x) : ked_uniform(sys, x); };
      break;
    case Method::TF:
      f = [&](double x) { return density ? density_tf(sys, x) : ked_tf(sys, x); };
      break;
    case Method::Exact:
      exact.emplace(sys);
      f = [&](double x) { return density ? exact->density(x) : exact->ked(x); };
      break;
    case Method::LangerSum:
      langer.emplace(sys);
      f = [&](double x) { return density ? langer->density(x) : langer->ked(x); };
      break;
  }
  DensityProfile out;
  out.xs = xs;
  out.method = method;
  out.quantity = quantity;
  out.values.reserve(xs.size());
  for (double x : xs) out.values.push_back(f(x));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", out.integral());
  out.metadata.emplace_back("integral", buf);
  return out;
}

}  // namespace fermi1d
