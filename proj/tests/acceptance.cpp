// Acceptance checks 1-11. Prints one PASS/FAIL line per criterion.
// Exit status is 0 when the set of failing criteria equals the list given
// with --expect-fail (empty by default), 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fermi1d/airy.hpp"
#include "fermi1d/commands.hpp"
#include "fermi1d/quantize.hpp"
#include "fermi1d/reference.hpp"
#include "fermi1d/uniform.hpp"

using namespace fermi1d;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen after calibration: measured 1.39e-3 on the SHO N=4 bulk.
constexpr double kBulkThreshold = 2.5e-3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

QuantumSystem sho4() { return build_system(PotentialModel::harmonic(), 1.0, 1.0, 4); }
QuantumSystem morse10() { return build_system(make_potential("morse", {{"D", 50.0}, {"a", 0.5}}), 1.0, 1.0, 10); }

// Hermite functions from the explicit H_n recurrence and normalisation constants.
double hermite_function(int n, double x) {
  double h_prev = 1.0, h = n == 0 ? 1.0 : 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  return h * std::exp(-0.5 * x * x) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(kPi));
}

// Integral over [lo, hi] of f with square-root endpoint behaviour,
// via x = lo + (hi - lo)(1 - cos t)/2 and composite Simpson in t.
double edge_smooth_integral(const std::function<double(double)>& f, double lo, double hi) {
  const int n = 4000;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = kPi * i / n;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * f(lo + 0.5 * (hi - lo) * (1.0 - std::cos(t))) * 0.5 * (hi - lo) * std::sin(t);
  }
  return sum * kPi / (3.0 * n);
}

Outcome criterion1() {
  double worst = 0.0;
  for (int j = 0; j <= 9; ++j) worst = std::max(worst, std::abs(wkb_energy(PotentialModel::harmonic(), 1.0, j) - (j + 0.5)));
  return {worst < 1e-8, format("max |E_wkb(j) - (j+1/2)| over j=0..9 = %.2e (tol 1e-8)", worst)};
}

Outcome criterion2() {
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i <= 1200; ++i) {
      const double x = -6.0 + 12.0 * i / 1200.0;
      double sum = 0.0;
      for (int j = 0; j < n; ++j) sum += hermite_function(j, x) * hermite_function(j, x);
      worst = std::max(worst, std::abs(sho_density_closed(n, x) - sum));
    }
  }
  return {worst < 1e-10, format("L-inf |closed form - orbital sum| on [-6,6], N=1..6 = %.2e (tol 1e-10)", worst)};
}

Outcome criterion3() {
  double worst = 0.0, worst_at = 0.0, last_ok = 0.0;
  bool still_ok = true;
  for (int i = 0; i <= 2450; ++i) {
    const double a = 0.05 + 0.001 * i;
    const double err = std::abs(xi0_series_partial(a, 8) - (1.0 / std::sin(a) - 1.0 / a));
    if (err > worst) {
      worst = err;
      worst_at = a;
    }
    if (still_ok && err < 1e-10) last_ok = a;
    still_ok = still_ok && err < 1e-10;
  }
  return {worst < 1e-10, format("max |8-term sum - closed form| on [0.05,2.5] = %.2e at a=%.3f (tol 1e-10); "
                                "tolerance holds up to a=%.3f",
                                worst, worst_at, last_ok)};
}

Outcome criterion4() {
  const auto sys = sho4();
  const ExactOracle oracle(sys);
  const double err = bulk_linf_fraction(sys, oracle, 2000);
  return {err <= kBulkThreshold,
          format("SHO N=4 bulk L-inf fractional error = %.3e (frozen threshold %.1e)", err, kBulkThreshold)};
}

Outcome criterion5() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [label, base] : {std::pair{"SHO N=4", sho4()}, std::pair{"Morse D=50 N=10", morse10()}}) {
    double prev = INFINITY;
    detail << label << ":";
    for (double gamma : {1.0, 0.5, 0.25}) {
      const auto sys = gamma_scale(base, gamma);
      const ExactOracle oracle(sys);
      const double err = bulk_linf_fraction(sys, oracle, static_cast<std::size_t>(2000 / gamma));
      const double drift = std::abs(sys.fermi_energy / base.fermi_energy - 1.0);
      ok = ok && err < prev && drift < 1e-9;
      detail << format(" g=%.2f err=%.3e dEF=%.0e", gamma, err, drift);
      prev = err;
    }
    detail << "; ";
  }
  return {ok, detail.str() + "(strictly decreasing, E_F drift < 1e-9)"};
}

Outcome criterion6() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [label, base] : {std::pair{"SHO", sho4()}, std::pair{"Morse D=50", morse10()}}) {
    const double gamma = 0.125;
    const auto sys = gamma_scale(base, gamma);
    const double x_p = sys.fermi_geometry.x_plus;
    // Independent evaluation of the law from the potential slope.
    const double law = std::pow(std::tgamma(1.0 / 3.0), -2.0) *
                       std::cbrt(2.0 * sys.mass * std::abs(sys.potential.derivative(x_p)) / (9.0 * sys.hbar * sys.hbar));
    const double ratio = density_uniform(sys, x_p) / law;
    ok = ok && std::abs(ratio - 1.0) < 0.05;
    detail << format("%s n(x+)/law = %.4f; ", label, ratio);
  }
  return {ok, detail.str() + "(within 5% at gamma=1/8)"};
}

Outcome criterion7() {
  double worst_identity = 0.0, worst_t1 = 0.0;
  for (const auto& sys : {sho4(), morse10()}) {
    const auto& g = sys.fermi_geometry;
    for (int i = 1; i < 400; ++i) {
      const double x = g.x_minus + g.width() * i / 400.0;
      const auto t = semiclassical_terms(sys, x);
      if (t.p_f.region != Region::Allowed) continue;
      const double p = t.p_f.magnitude;
      const double smooth = p * p / (6.0 * sys.mass) * t.density();
      const double osc = p * sys.omega_f / (3.0 * std::sin(t.alpha_f.magnitude)) * t.ai * t.ai_prime;
      const double scale = std::max({std::abs(t.ked()), std::abs(smooth), std::abs(osc)});
      worst_identity = std::max(worst_identity, std::abs(t.ked() - smooth - osc) / scale);
      const double t1 = p * p / (2.0 * sys.mass) * t.n_correction;
      if (t1 != 0.0) worst_t1 = std::max(worst_t1, std::abs(t.t_correction - t1) / std::abs(t1));
    }
  }
  return {worst_identity < 1e-14 && worst_t1 < 1e-12,
          format("max relative residual: t identity %.2e (tol 1e-14), t1 = p^2 n1/2 %.2e (tol 1e-12)", worst_identity,
                 worst_t1)};
}

Outcome criterion8() {
  double worst_negative = 0.0, worst_jump = 0.0, worst_raw = 0.0;
  std::string raw_at;
  for (int n : {1, 4, 10}) {
    for (const auto& name : builtin_potential_names()) {
      ParamMap params;
      if (n == 10 && (name == "morse" || name == "poschl_teller")) params = {{"D", 50.0}, {"a", 0.5}};
      const auto sys = build_system(make_potential(name, params), 1.0, 1.0, n);
      double peak = 0.0, low = 0.0;
      for (double x : default_grid(sys, 4000)) {
        const double v = density_uniform(sys, x);
        peak = std::max(peak, v);
        low = std::min(low, v);
      }
      worst_negative = std::max(worst_negative, -low / peak);
      const auto& g = sys.fermi_geometry;
      const double d = 1e-5 * g.width();
      for (double x_t : {g.x_minus, g.x_plus}) {
        auto diff = [&](double s) { return density_uniform(sys, x_t + s) - density_uniform(sys, x_t - s); };
        const double n_t = density_uniform(sys, x_t);
        worst_jump = std::max(worst_jump, 2.0 * std::abs(diff(d) - 0.5 * diff(2.0 * d)) / n_t);
        const double raw = std::abs(diff(d)) / n_t;
        if (raw > worst_raw) {
          worst_raw = raw;
          raw_at = name + " N=" + std::to_string(n);
        }
      }
    }
  }
  return {worst_negative <= 1e-12 && worst_jump < 1e-3,
          format("min n / max n = %.1e (>= -1e-12); relative jump at turning points %.2e (tol 1e-3); "
                 "raw sample difference incl. slope %.2e (%s)",
                 -worst_negative, worst_jump, worst_raw, raw_at.c_str())};
}

Outcome criterion9() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [label, base] : {std::pair{"SHO N=4", sho4()}, std::pair{"Morse D=50 N=10", morse10()}}) {
    double prev = INFINITY;
    detail << label << " ratio:";
    for (double gamma : {1.0, 0.5, 0.25}) {
      const double ratio = derivative_jump_estimate(gamma_scale(base, gamma)).ratio();
      ok = ok && std::abs(ratio - 1.0) < prev;
      prev = std::abs(ratio - 1.0);
      detail << format(" %.3f", ratio);
    }
    detail << "; ";
  }
  return {ok, detail.str() + "(|ratio - 1| strictly decreasing)"};
}

Outcome criterion10() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [label, sys] : {std::pair{"SHO N=4", sho4()}, std::pair{"Morse D=50 N=10", morse10()}}) {
    const auto xs = default_grid(sys, 1200);
    std::vector<double> n;
    for (double x : xs) n.push_back(density_uniform(sys, x));
    double integral = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) integral += 0.5 * (n[i] + n[i - 1]) * (xs[i] - xs[i - 1]);
    const auto& g = sys.fermi_geometry;
    const double tf = edge_smooth_integral([&](double x) { return density_tf(sys, x); }, g.x_minus, g.x_plus);
    const double target = sys.n_particles;
    ok = ok && std::abs(integral / target - 1.0) < 0.01 && std::abs(tf / target - 1.0) < 1e-6;
    detail << format("%s: int n_sc = %.5f, int n_TF = %.9f; ", label, integral, tf);
  }
  return {ok, detail.str() + "(n_sc within 1%, n_TF within 1e-6)"};
}

Outcome criterion11() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [label, base] : {std::pair{"SHO", sho4()}, std::pair{"Morse D=50", morse10()}}) {
    const auto sys = gamma_scale(base, 0.125);
    const double x = sys.fermi_geometry.x_plus + 5.0 * turning_length(sys);
    const auto est = regional_asymptotics(sys, x);
    const double rn = density_uniform(sys, x) / est.n_printed;
    const double rt = ked_uniform(sys, x) / est.t_printed;
    ok = ok && rn >= 0.9 && rn <= 1.1 && rt >= 0.9 && rt <= 1.1;
    detail << format("%s: n/n_est = %.3f, t/t_est = %.3f (leading-form ratios %.3f, %.3f); ", label, rn, rt,
                     density_uniform(sys, x) / est.n_leading, ked_uniform(sys, x) / est.t_leading);
  }
  return {ok, detail.str() + "(required in [0.9, 1.1])"};
}

std::set<int> parse_list(const char* text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected = parse_list(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail 3,11]\n");
      return 2;
    }
  }

  const std::vector<Outcome (*)()> criteria = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8,
                                               criterion9, criterion10, criterion11};
  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::printf("criterion %2d %s [%.1fs] %s%s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str(),
                !o.pass && expected.count(id) ? " (known failure)" : "");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
