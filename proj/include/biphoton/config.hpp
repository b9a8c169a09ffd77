#pragma once

#include <cstdint>
#include <string>

#include "biphoton/medium.hpp"
#include "biphoton/types.hpp"

namespace biphoton {

/// Complete, validated description of one run.  Defaults reproduce the
/// optical-depth-7 preset.
struct RunConfig {
  AtomicMedium medium;
  DriveLasers lasers;
  DetectionParams detection;
  SpectralGrid grid;
  PhaseMatchConvention convention = PhaseMatchConvention::WithLength;
  double tau_range = 500e-9;  ///< temporal half-window [s]
  std::uint64_t seed = 1;
  std::string output_dir = ".";

  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// The mismatch value implied by the detunings when none is given explicitly.
double derived_wavenumber_diff(const AtomicMedium& medium, const DriveLasers& lasers);

/// Parses INI-style text with sections [medium], [lasers], [detection],
/// [grid], [run].  Values accept unit suffixes (MHz_x2pi, GHz_x2pi, ns, s,
/// cm, nm, deg, percent, ...); bare numbers are SI / radians.  Unknown keys,
/// malformed lines, and invariant violations raise ConfigError; parse errors
/// carry the line number.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file (IoError if unreadable).
RunConfig load_config(const std::string& path);

/// Canonical textual form: every key in SI units at full precision, so that
/// parse_config(serialize_config(cfg)) == cfg exactly.
std::string serialize_config(const RunConfig& cfg);

/// Single quantity with optional unit suffix, e.g. "20.7 MHz_x2pi".
/// `context` prefixes error messages.
double parse_quantity(const std::string& text, const std::string& context);

}  // namespace biphoton
