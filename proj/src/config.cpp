#include "fermi1d/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fermi1d/error.hpp"

namespace fermi1d {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_real(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw ConfigError("config key '" + key + "': '" + text + "' is not a finite number");
  }
  return v;
}

long parse_integer(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
  }
  return v;
}

double positive(const std::string& key, double v) {
  if (!(v > 0.0)) throw ConfigError("config key '" + key + "' must be positive");
  return v;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_float_format(const std::string& fmt) {
  // Only a single %.<digits><e|f|g> conversion is accepted.
  if (fmt.size() < 4 || fmt[0] != '%' || fmt[1] != '.') {
    throw ConfigError("output.float_format must look like %.12e");
  }
  std::size_t i = 2;
  while (i < fmt.size() && std::isdigit(static_cast<unsigned char>(fmt[i]))) ++i;
  if (i == 2 || i + 1 != fmt.size() || std::string("eEfgG").find(fmt[i]) == std::string::npos) {
    throw ConfigError("output.float_format must look like %.12e");
  }
}

}  // namespace

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  for (const auto& name : split_list(list)) out.push_back(parse_method(name));
  if (out.empty()) throw ConfigError("run.methods must name at least one method");
  return out;
}

std::vector<double> parse_gamma_list(const std::string& list) {
  std::vector<double> out;
  for (const auto& item : split_list(list)) {
    double g = 0.0;
    const auto slash = item.find('/');
    if (slash != std::string::npos) {
      const double num = parse_real("scan.gamma_list", trim(item.substr(0, slash)));
      const double den = parse_real("scan.gamma_list", trim(item.substr(slash + 1)));
      if (den == 0.0) throw ConfigError("scan.gamma_list: zero denominator in '" + item + "'");
      g = num / den;
    } else {
      g = parse_real("scan.gamma_list", item);
    }
    if (!(g > 0.0 && g <= 1.0)) throw ConfigError("scan.gamma_list: gamma must lie in (0, 1], got " + item);
    const double k = 1.0 / g;
    if (std::abs(k - std::round(k)) > 1e-9 * k) {
      throw ConfigError("scan.gamma_list: gamma must be 1/k for an integer k, got " + item);
    }
    out.push_back(1.0 / std::round(k));
  }
  if (out.empty()) throw ConfigError("scan.gamma_list must not be empty");
  return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  static const std::string params_prefix = "potential.params.";
  if (key == "potential.name") {
    cfg.potential_name = value;
  } else if (key.rfind(params_prefix, 0) == 0 && key.size() > params_prefix.size()) {
    cfg.potential_params[key.substr(params_prefix.size())] = parse_real(key, value);
  } else if (key == "system.hbar") {
    cfg.hbar = positive(key, parse_real(key, value));
  } else if (key == "system.mass") {
    cfg.mass = positive(key, parse_real(key, value));
  } else if (key == "system.n_particles") {
    const long n = parse_integer(key, value);
    if (n < 1 || n > 100000) throw ConfigError("system.n_particles must be a positive integer");
    cfg.n_particles = static_cast<int>(n);
  } else if (key == "grid.min") {
    cfg.grid_min = value == "auto" ? std::nullopt : std::optional<double>(parse_real(key, value));
  } else if (key == "grid.max") {
    cfg.grid_max = value == "auto" ? std::nullopt : std::optional<double>(parse_real(key, value));
  } else if (key == "grid.points") {
    if (value == "auto") {
      cfg.grid_points.reset();
    } else {
      const long n = parse_integer(key, value);
      if (n < 2) throw ConfigError("grid.points must be at least 2");
      cfg.grid_points = static_cast<std::size_t>(n);
    }
  } else if (key == "run.methods") {
    cfg.methods = parse_methods(value);
  } else if (key == "scan.gamma_list") {
    cfg.gamma_list = parse_gamma_list(value);
  } else if (key == "output.path") {
    if (value.empty()) throw ConfigError("output.path must not be empty");
    cfg.output_path = value;
  } else if (key == "output.float_format") {
    check_float_format(value);
    cfg.float_format = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_setting(base, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  if (base.grid_min && base.grid_max && !(*base.grid_max > *base.grid_min)) {
    throw ConfigError("grid.max must exceed grid.min");
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("potential.name", potential_name);
  for (const auto& [k, v] : potential_params) out.emplace_back("potential.params." + k, format_real(v));
  out.emplace_back("system.hbar", format_real(hbar));
  out.emplace_back("system.mass", format_real(mass));
  out.emplace_back("system.n_particles", std::to_string(n_particles));
  out.emplace_back("grid.min", grid_min ? format_real(*grid_min) : "auto");
  out.emplace_back("grid.max", grid_max ? format_real(*grid_max) : "auto");
  out.emplace_back("grid.points", grid_points ? std::to_string(*grid_points) : "auto");
  std::string methods_text;
  for (Method m : methods) methods_text += (methods_text.empty() ? "" : ",") + std::string(to_string(m));
  out.emplace_back("run.methods", methods_text);
  std::string gammas;
  for (double g : gamma_list) gammas += (gammas.empty() ? "" : ",") + format_real(g);
  out.emplace_back("scan.gamma_list", gammas);
  out.emplace_back("output.path", output_path);
  out.emplace_back("output.float_format", float_format);
  return out;
}

}  // namespace fermi1d
