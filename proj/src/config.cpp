#include "biphoton/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

const std::map<std::string, double>& unit_table() {
  static const std::map<std::string, double> table{
      {"Hz_x2pi", two_pi},          {"kHz_x2pi", two_pi * 1e3},
      {"MHz_x2pi", two_pi * 1e6},   {"GHz_x2pi", two_pi * 1e9},
      {"THz_x2pi", two_pi * 1e12},  {"rad_s", 1.0},
      {"s", 1.0},                   {"ms", 1e-3},
      {"us", 1e-6},                 {"ns", 1e-9},
      {"ps", 1e-12},                {"m", 1.0},
      {"cm", 1e-2},                 {"mm", 1e-3},
      {"um", 1e-6},                 {"nm", 1e-9},
      {"rad", 1.0},                 {"deg", pi / 180.0},
      {"percent", 1e-2},            {"inv_m", 1.0},
  };
  return table;
}

double parse_double(const std::string& text, const std::string& context, std::string* unit_out) {
  errno = 0;
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE || !std::isfinite(value))
    throw ConfigError(context + ": cannot parse number from '" + text + "'");
  if (unit_out) *unit_out = trim(std::string(end));
  return value;
}

std::uint64_t parse_integer(const std::string& text, const std::string& context) {
  errno = 0;
  const char* begin = text.c_str();
  char* end = nullptr;
  const unsigned long long value = std::strtoull(begin, &end, 10);
  if (end == begin || errno == ERANGE || !trim(std::string(end)).empty())
    throw ConfigError(context + ": cannot parse integer from '" + text + "'");
  return value;
}

std::string fmt_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double parse_quantity(const std::string& text, const std::string& context) {
  std::string unit;
  const double value = parse_double(text, context, &unit);
  if (unit.empty()) return value;
  const auto it = unit_table().find(unit);
  if (it == unit_table().end()) throw ConfigError(context + ": unknown unit '" + unit + "'");
  return value * it->second;
}

double derived_wavenumber_diff(const AtomicMedium& medium, const DriveLasers& lasers) {
  return (lasers.delta_p - medium.delta12) / speed_of_light;
}

void RunConfig::validate() const {
  medium.validate();
  lasers.validate();
  detection.validate();
  grid.validate();
  if (!(tau_range > 0.0)) throw ConfigError("tau_range must be > 0");
  if (tau_range > grid.max_tau() + 1e-6 * (two_pi / grid.span))
    throw ConfigError("tau_range exceeds the temporal window (n/2 - 1) * 2*pi/span of the grid");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool diff_given = false;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string context = "line " + std::to_string(line_no);
    std::string line = raw;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(context + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "medium" && section != "lasers" && section != "detection" &&
          section != "grid" && section != "run")
        throw ConfigError(context + ": unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(context + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(context + ": expected key = value");
    if (section.empty()) throw ConfigError(context + ": key outside any [section]");
    const std::string where = context + " ([" + section + "] " + key + ")";

    if (section == "medium") {
      if (key == "optical_depth") cfg.medium.optical_depth = parse_quantity(value, where);
      else if (key == "length_L") cfg.medium.length_L = parse_quantity(value, where);
      else if (key == "gamma13") cfg.medium.gamma13 = parse_quantity(value, where);
      else if (key == "gamma12") cfg.medium.gamma12 = parse_quantity(value, where);
      else if (key == "delta12") cfg.medium.delta12 = parse_quantity(value, where);
      else if (key == "carrier_wavelength") cfg.medium.carrier_wavelength = parse_quantity(value, where);
      else if (key == "dipole_ratio") cfg.medium.dipole_ratio = parse_quantity(value, where);
      else throw ConfigError(context + ": unknown key '" + key + "' in [medium]");
    } else if (section == "lasers") {
      if (key == "omega_p_rabi") cfg.lasers.omega_p_rabi = parse_quantity(value, where);
      else if (key == "omega_c_rabi") cfg.lasers.omega_c_rabi = parse_quantity(value, where);
      else if (key == "delta_p") cfg.lasers.delta_p = parse_quantity(value, where);
      else if (key == "theta") cfg.lasers.theta = parse_quantity(value, where);
      else if (key == "pump_coupling_wavenumber_diff") {
        cfg.lasers.pump_coupling_wavenumber_diff = parse_quantity(value, where);
        diff_given = true;
      } else throw ConfigError(context + ": unknown key '" + key + "' in [lasers]");
    } else if (section == "detection") {
      if (key == "duty_cycle_xi") cfg.detection.duty_cycle_xi = parse_quantity(value, where);
      else if (key == "efficiency_eta") cfg.detection.efficiency_eta = parse_quantity(value, where);
      else if (key == "acquisition_T") cfg.detection.acquisition_T = parse_quantity(value, where);
      else if (key == "bin_dt") cfg.detection.bin_dt = parse_quantity(value, where);
      else throw ConfigError(context + ": unknown key '" + key + "' in [detection]");
    } else if (section == "grid") {
      if (key == "n_points") cfg.grid.n_points = static_cast<std::size_t>(parse_integer(value, where));
      else if (key == "span") cfg.grid.span = parse_quantity(value, where);
      else throw ConfigError(context + ": unknown key '" + key + "' in [grid]");
    } else {  // run
      if (key == "tau_range") cfg.tau_range = parse_quantity(value, where);
      else if (key == "seed") cfg.seed = parse_integer(value, where);
      else if (key == "output_dir") cfg.output_dir = value;
      else if (key == "convention") {
        if (value == "with-length") cfg.convention = PhaseMatchConvention::WithLength;
        else if (value == "as-printed") cfg.convention = PhaseMatchConvention::AsPrinted;
        else throw ConfigError(context + ": convention must be 'with-length' or 'as-printed'");
      } else throw ConfigError(context + ": unknown key '" + key + "' in [run]");
    }
  }

  if (!diff_given)
    cfg.lasers.pump_coupling_wavenumber_diff = derived_wavenumber_diff(cfg.medium, cfg.lasers);
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[medium]\n"
      << "optical_depth = " << fmt_full(cfg.medium.optical_depth) << "\n"
      << "length_L = " << fmt_full(cfg.medium.length_L) << "\n"
      << "gamma13 = " << fmt_full(cfg.medium.gamma13) << "\n"
      << "gamma12 = " << fmt_full(cfg.medium.gamma12) << "\n"
      << "delta12 = " << fmt_full(cfg.medium.delta12) << "\n"
      << "carrier_wavelength = " << fmt_full(cfg.medium.carrier_wavelength) << "\n"
      << "dipole_ratio = " << fmt_full(cfg.medium.dipole_ratio) << "\n"
      << "\n[lasers]\n"
      << "omega_p_rabi = " << fmt_full(cfg.lasers.omega_p_rabi) << "\n"
      << "omega_c_rabi = " << fmt_full(cfg.lasers.omega_c_rabi) << "\n"
      << "delta_p = " << fmt_full(cfg.lasers.delta_p) << "\n"
      << "theta = " << fmt_full(cfg.lasers.theta) << "\n"
      << "pump_coupling_wavenumber_diff = " << fmt_full(cfg.lasers.pump_coupling_wavenumber_diff)
      << "\n"
      << "\n[detection]\n"
      << "duty_cycle_xi = " << fmt_full(cfg.detection.duty_cycle_xi) << "\n"
      << "efficiency_eta = " << fmt_full(cfg.detection.efficiency_eta) << "\n"
      << "acquisition_T = " << fmt_full(cfg.detection.acquisition_T) << "\n"
      << "bin_dt = " << fmt_full(cfg.detection.bin_dt) << "\n"
      << "\n[grid]\n"
      << "n_points = " << cfg.grid.n_points << "\n"
      << "span = " << fmt_full(cfg.grid.span) << "\n"
      << "\n[run]\n"
      << "convention = "
      << (cfg.convention == PhaseMatchConvention::WithLength ? "with-length" : "as-printed") << "\n"
      << "tau_range = " << fmt_full(cfg.tau_range) << "\n"
      << "seed = " << cfg.seed << "\n"
      << "output_dir = " << cfg.output_dir << "\n";
  return out.str();
}

}  // namespace biphoton
