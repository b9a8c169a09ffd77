#include "biphoton/medium.hpp"

#include <cmath>
#include <string>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

[[noreturn]] void throw_nonfinite(const char* what, double varpi) {
  throw DomainError(std::string(what) + " is non-finite at varpi = " + std::to_string(varpi) +
                    " rad/s (resonance denominator underflow)");
}

}  // namespace

void AtomicMedium::validate() const {
  if (!(optical_depth > 0.0)) throw ConfigError("optical_depth must be > 0");
  if (!(length_L > 0.0)) throw ConfigError("length_L must be > 0");
  if (!(gamma13 > 0.0)) throw ConfigError("gamma13 must be > 0");
  if (!(gamma12 >= 0.0)) throw ConfigError("gamma12 must be >= 0");
  if (!std::isfinite(delta12)) throw ConfigError("delta12 must be finite");
  if (!(carrier_wavelength > 0.0)) throw ConfigError("carrier_wavelength must be > 0");
  if (!(dipole_ratio > 0.0)) throw ConfigError("dipole_ratio must be > 0");
}

void DriveLasers::validate() const {
  if (!(omega_p_rabi >= 0.0)) throw ConfigError("omega_p_rabi must be >= 0");
  // omega_c_rabi = 0 closes the transparency window but keeps every response
  // function finite as long as gamma12 > 0; the two-level limit is a useful
  // cross-check, so construction permits it and the evaluation points that
  // genuinely degenerate raise DomainError instead.
  if (!(omega_c_rabi >= 0.0)) throw ConfigError("omega_c_rabi must be >= 0");
  if (!std::isfinite(delta_p)) throw ConfigError("delta_p must be finite");
  if (!(theta >= 0.0 && theta < pi / 2.0)) throw ConfigError("theta must lie in [0, pi/2)");
  if (!std::isfinite(pump_coupling_wavenumber_diff))
    throw ConfigError("pump_coupling_wavenumber_diff must be finite");
}

Complex resonance_denominator(double varpi, const AtomicMedium& medium, const DriveLasers& lasers) {
  const Complex opt{varpi, medium.gamma13};
  const Complex ground{varpi, medium.gamma12};
  return lasers.omega_c_rabi * lasers.omega_c_rabi - 4.0 * opt * ground;
}

Complex susceptibility(double varpi, const AtomicMedium& medium, const DriveLasers& lasers) {
  const double prefactor =
      4.0 * medium.optical_depth * medium.gamma13 / (medium.carrier_wavenumber() * medium.length_L);
  const Complex chi = prefactor * Complex{varpi, medium.gamma12} /
                      resonance_denominator(varpi, medium, lasers);
  if (!finite(chi)) throw_nonfinite("susceptibility", varpi);
  return chi;
}

Complex wavenumber(double varpi, const AtomicMedium& medium, const DriveLasers& lasers) {
  // std::sqrt takes the principal branch, so Re k >= 0 and the medium stays
  // passive (absorbing, not amplifying) for Im chi >= 0.
  const Complex k = medium.carrier_wavenumber() * std::sqrt(1.0 + susceptibility(varpi, medium, lasers));
  if (!finite(k)) throw_nonfinite("wavenumber", varpi);
  return k;
}

Complex coupling_kappa(double varpi, const AtomicMedium& medium, const DriveLasers& lasers) {
  const Complex numerator = -imag_unit * lasers.omega_p_rabi * lasers.omega_c_rabi *
                            medium.gamma13 * medium.optical_depth * medium.dipole_ratio /
                            (2.0 * medium.length_L);
  const Complex denominator =
      Complex{lasers.delta_p, medium.gamma13} * resonance_denominator(varpi, medium, lasers);
  const Complex kappa = numerator / denominator;
  if (!finite(kappa)) throw_nonfinite("coupling_kappa", varpi);
  return kappa;
}

Complex sinc(Complex z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

Complex phase_matching(double varpi, const AtomicMedium& medium, const DriveLasers& lasers,
                       PhaseMatchConvention convention) {
  const Complex k_pos = wavenumber(varpi, medium, lasers);
  const Complex k_neg = wavenumber(-varpi, medium, lasers);
  const double mismatch = convention == PhaseMatchConvention::WithLength
                              ? lasers.pump_coupling_wavenumber_diff * medium.length_L
                              : lasers.pump_coupling_wavenumber_diff;
  const Complex half_arg = ((k_pos - k_neg) * medium.length_L + mismatch * std::cos(lasers.theta)) / 2.0;
  const Complex phi = sinc(half_arg) * std::exp(imag_unit * (k_pos + k_neg) * (medium.length_L / 2.0));
  if (!finite(phi)) throw_nonfinite("phase_matching", varpi);
  return phi;
}

}  // namespace biphoton
