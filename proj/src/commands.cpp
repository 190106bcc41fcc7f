#include "fermi1d/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "fermi1d/error.hpp"
#include "fermi1d/numerics.hpp"
#include "fermi1d/uniform.hpp"

namespace fermi1d {

namespace {

const char* const kRegionNames[] = {"allowed", "turning", "forbidden", "all"};

std::string fmt(const RunConfig& cfg, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, cfg.float_format.c_str(), v);
  return buf;
}

std::string column_name(Method m, Quantity q) {
  return std::string(q == Quantity::Density ? "n_" : "t_") + to_string(m);
}

// Config with the grid and potential defaults made explicit.
RunConfig resolved(const RunConfig& cfg, const QuantumSystem& sys, const std::vector<double>& xs) {
  RunConfig r = cfg;
  r.potential_params = sys.potential.params();
  r.grid_min = xs.front();
  r.grid_max = xs.back();
  r.grid_points = xs.size();
  return r;
}

void write_header(std::ostringstream& os, const char* command, const RunConfig& cfg) {
  os << "# fermi1d " << command << "\n";
  for (const auto& [k, v] : cfg.entries()) os << "# " << k << "=" << v << "\n";
}

std::vector<double> grid_for(const RunConfig& cfg, const QuantumSystem& sys) {
  const std::size_t points = cfg.grid_points.value_or(1200);
  std::vector<double> xs = default_grid(sys, points);
  const double lo = cfg.grid_min.value_or(xs.front());
  const double hi = cfg.grid_max.value_or(xs.back());
  if (!(hi > lo)) throw ConfigError("grid.max must exceed grid.min");
  return numerics::linspace(lo, hi, points);
}

std::string profile_command(const RunConfig& cfg, Quantity quantity, const char* name) {
  const QuantumSystem sys = system_from(cfg);
  const std::vector<double> xs = grid_for(cfg, sys);
  std::vector<DensityProfile> profiles;
  for (Method m : cfg.methods) profiles.push_back(profile(sys, xs, m, quantity));

  std::ostringstream os;
  write_header(os, name, resolved(cfg, sys, xs));
  os << "# fermi_energy=" << fmt(cfg, sys.fermi_energy) << "\n";
  os << "x";
  for (Method m : cfg.methods) os << "," << column_name(m, quantity);
  os << "\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << fmt(cfg, xs[i]);
    for (const auto& p : profiles) os << "," << fmt(cfg, p.values[i]);
    os << "\n";
  }
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    os << "# integral " << column_name(cfg.methods[k], quantity) << "=" << fmt(cfg, profiles[k].integral())
       << "\n";
  }
  return os.str();
}

int region_index(Region r) {
  switch (r) {
    case Region::Allowed:
      return 0;
    case Region::Turning:
      return 1;
    case Region::Forbidden:
      return 2;
  }
  return 3;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + cfg.output_path + "'");
  f << text;
}

}  // namespace

const RegionErrors& MethodComparison::region(const std::string& name) const {
  for (const auto& r : regions) {
    if (r.region == name) return r;
  }
  throw std::out_of_range("no region '" + name + "' in comparison");
}

const MethodComparison& ComparisonReport::method(Method m) const {
  for (const auto& c : methods) {
    if (c.method == m) return c;
  }
  throw std::out_of_range(std::string("method ") + to_string(m) + " not in comparison");
}

ComparisonReport compare_methods(const QuantumSystem& sys, const std::vector<double>& xs,
                                 const std::vector<Method>& methods, Quantity quantity,
                                 const ExactOracle& oracle) {
  const bool density = quantity == Quantity::Density;
  std::vector<double> exact;
  std::vector<int> region;
  double peak = 0.0;
  for (double x : xs) {
    exact.push_back(density ? oracle.density(x) : oracle.ked(x));
    region.push_back(region_index(classify(sys, x)));
    peak = std::max(peak, std::abs(exact.back()));
  }
  ComparisonReport report;
  report.quantity = quantity;
  report.exact_integral = numerics::trapezoid(xs, exact);
  for (Method m : methods) {
    if (m == Method::Exact) continue;
    const DensityProfile p = profile(sys, xs, m, quantity);
    MethodComparison mc;
    mc.method = m;
    mc.integral = p.integral();
    std::vector<double> sq_abs(4, 0.0), sq_frac(4, 0.0), width(4, 0.0);
    std::vector<std::size_t> frac_points(4, 0);
    for (const char* name : kRegionNames) mc.regions.push_back({name});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double dx = i + 1 < xs.size() ? xs[i + 1] - xs[i] : xs[i] - xs[i - 1];
      const double err = std::abs(p.values[i] - exact[i]);
      const bool frac_ok = std::abs(exact[i]) >= 1e-10 * peak && exact[i] != 0.0;
      const double frac = frac_ok ? err / std::abs(exact[i]) : 0.0;
      for (int r : {region[i], 3}) {
        RegionErrors& e = mc.regions[static_cast<std::size_t>(r)];
        ++e.points;
        e.linf_abs = std::max(e.linf_abs, err);
        sq_abs[r] += err * err * dx;
        if (frac_ok) {
          e.linf_frac = std::max(e.linf_frac, frac);
          sq_frac[r] += frac * frac * dx;
          width[r] += dx;
          ++frac_points[r];
        }
      }
    }
    for (int r = 0; r < 4; ++r) {
      RegionErrors& e = mc.regions[static_cast<std::size_t>(r)];
      e.l2_abs = std::sqrt(sq_abs[r]);
      e.l2_frac = width[r] > 0.0 ? std::sqrt(sq_frac[r] / width[r]) : 0.0;
    }
    report.methods.push_back(std::move(mc));
  }
  return report;
}

double bulk_linf_fraction(const QuantumSystem& sys, const ExactOracle& oracle, std::size_t points) {
  const TurningGeometry& g = sys.fermi_geometry;
  double worst = 0.0;
  for (double x : numerics::linspace(g.x_minus, g.x_plus, points)) {
    if (classify(sys, x) != Region::Allowed) continue;
    const double exact = oracle.density(x);
    worst = std::max(worst, std::abs(density_uniform(sys, x) / exact - 1.0));
  }
  return worst;
}

std::vector<double> default_grid(const QuantumSystem& sys, std::size_t points) {
  const double l = turning_length(sys);
  return numerics::linspace(sys.fermi_geometry.x_minus - 4.0 * l, sys.fermi_geometry.x_plus + 4.0 * l, points);
}

QuantumSystem system_from(const RunConfig& cfg) {
  return build_system(make_potential(cfg.potential_name, cfg.potential_params), cfg.hbar, cfg.mass,
                      cfg.n_particles);
}

std::string cmd_density(const RunConfig& cfg) { return profile_command(cfg, Quantity::Density, "density"); }

std::string cmd_ked(const RunConfig& cfg) { return profile_command(cfg, Quantity::Ked, "ked"); }

std::string cmd_compare(const RunConfig& cfg, std::string* summary) {
  const QuantumSystem sys = system_from(cfg);
  const std::vector<double> xs = grid_for(cfg, sys);
  const ExactOracle oracle(sys);
  const ComparisonReport report = compare_methods(sys, xs, cfg.methods, Quantity::Density, oracle);

  std::ostringstream os;
  write_header(os, "compare", resolved(cfg, sys, xs));
  os << "method,region,points,linf_abs,l2_abs,linf_frac,l2_frac\n";
  for (const auto& mc : report.methods) {
    for (const auto& r : mc.regions) {
      os << to_string(mc.method) << "," << r.region << "," << r.points << "," << fmt(cfg, r.linf_abs) << ","
         << fmt(cfg, r.l2_abs) << "," << fmt(cfg, r.linf_frac) << "," << fmt(cfg, r.l2_frac) << "\n";
    }
  }
  os << "# integral exact=" << fmt(cfg, report.exact_integral) << "\n";
  for (const auto& mc : report.methods) {
    os << "# integral " << to_string(mc.method) << "=" << fmt(cfg, mc.integral) << "\n";
  }
  if (summary) {
    std::ostringstream s;
    char line[256];
    std::snprintf(line, sizeof line, "%s N=%d hbar=%g: exact integral %.6f\n", sys.potential.name().c_str(),
                  sys.n_particles, sys.hbar, report.exact_integral);
    s << line;
    for (const auto& mc : report.methods) {
      std::snprintf(line, sizeof line, "  %-10s integral %.6f\n", to_string(mc.method), mc.integral);
      s << line;
      for (const auto& r : mc.regions) {
        std::snprintf(line, sizeof line, "    %-9s %6zu pts  max frac err %.3e  rms frac err %.3e\n",
                      r.region.c_str(), r.points, r.linf_frac, r.l2_frac);
        s << line;
      }
    }
    *summary = s.str();
  }
  return os.str();
}

std::string cmd_gamma_scan(const RunConfig& cfg) {
  const QuantumSystem base = system_from(cfg);
  const std::size_t points = cfg.grid_points.value_or(1200);
  std::ostringstream os;
  RunConfig echo = cfg;
  echo.potential_params = base.potential.params();
  write_header(os, "gamma-scan", echo);
  os << "gamma,hbar,n_particles,fermi_energy,bulk_linf_frac,turning_value,turning_predicted,turning_ratio,"
        "forbidden_ratio_printed,forbidden_ratio_leading,jump_measured,jump_predicted,jump_ratio\n";
  for (double gamma : cfg.gamma_list) {
    const QuantumSystem sys = gamma_scale(base, gamma);
    const ExactOracle oracle(sys);
    const double bulk = bulk_linf_fraction(sys, oracle, static_cast<std::size_t>(points / gamma));
    const double x_plus = sys.fermi_geometry.x_plus;
    const double n_turn = density_uniform(sys, x_plus);
    const double n_pred = turning_point_density(sys, x_plus);
    const double x_tail = x_plus + 5.0 * turning_length(sys);
    const double n_tail = density_uniform(sys, x_tail);
    const RegionalEstimate est = regional_asymptotics(sys, x_tail);
    const DerivativeJump jump = derivative_jump_estimate(sys);
    os << fmt(cfg, gamma) << "," << fmt(cfg, sys.hbar) << "," << sys.n_particles << "," << fmt(cfg, sys.fermi_energy)
       << "," << fmt(cfg, bulk) << "," << fmt(cfg, n_turn) << "," << fmt(cfg, n_pred) << ","
       << fmt(cfg, n_turn / n_pred) << "," << fmt(cfg, n_tail / est.n_printed) << ","
       << fmt(cfg, n_tail / est.n_leading) << "," << fmt(cfg, jump.measured) << "," << fmt(cfg, jump.predicted)
       << "," << fmt(cfg, jump.ratio()) << "\n";
  }
  return os.str();
}

std::string cmd_spectrum(const RunConfig& cfg) {
  const QuantumSystem sys = system_from(cfg);
  const EigenSolution sol = solve_schrodinger(sys.potential, sys.hbar, sys.mass,
                                              auto_grid(sys.potential, sys.hbar, sys.mass, sys.fermi_energy),
                                              sys.n_particles);
  std::ostringstream os;
  RunConfig echo = cfg;
  echo.potential_params = sys.potential.params();
  write_header(os, "spectrum", echo);
  os << "lambda,e_wkb,e_exact,difference\n";
  for (int j = 0; j < sys.n_particles; ++j) {
    const double e_wkb = wkb_energy(sys.potential, sys.hbar, j, sys.mass);
    const double e_exact = sol.energies[static_cast<std::size_t>(j)];
    os << fmt(cfg, j) << "," << fmt(cfg, e_wkb) << "," << fmt(cfg, e_exact) << "," << fmt(cfg, e_wkb - e_exact)
       << "\n";
  }
  os << fmt(cfg, sys.n_particles - 0.5) << "," << fmt(cfg, sys.fermi_energy) << ",nan,nan\n";
  os << "# richardson_shift=" << fmt(cfg, sol.richardson_shift) << "\n";
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform semiclassical densities of 1-D fermions"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  std::size_t grid_points = 0;
  std::string methods;
  std::string gammas;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--out", out_path, "output CSV path ('-' for stdout)");
  app.add_option("--grid-points", grid_points, "number of grid points");
  app.add_option("--methods", methods, "comma list of uniform,tf,exact,langer_sum");
  app.add_option("--gamma", gammas, "comma list of gammas (1/k)");
  const std::pair<const char*, const char*> commands[] = {
      {"density", "density profile for each method on the grid"},
      {"ked", "kinetic energy density profile for each method"},
      {"compare", "error norms against the exact solution by region"},
      {"gamma-scan", "convergence diagnostics along hbar -> gamma hbar"},
      {"spectrum", "WKB and exact energy levels"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (!out_path.empty()) apply_setting(cfg, "output.path", out_path);
    if (grid_points != 0) apply_setting(cfg, "grid.points", std::to_string(grid_points));
    if (!methods.empty()) apply_setting(cfg, "run.methods", methods);
    if (!gammas.empty()) apply_setting(cfg, "scan.gamma_list", gammas);

    const std::string command = app.get_subcommands().front()->get_name();
    std::string text;
    std::string summary;
    if (command == "density") text = cmd_density(cfg);
    else if (command == "ked") text = cmd_ked(cfg);
    else if (command == "compare") text = cmd_compare(cfg, &summary);
    else if (command == "gamma-scan") text = cmd_gamma_scan(cfg);
    else text = cmd_spectrum(cfg);
    write_output(cfg, text, out);
    if (!summary.empty()) (cfg.output_path == "-" ? err : out) << summary;
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace fermi1d
