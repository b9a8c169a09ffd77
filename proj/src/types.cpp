#include "biphoton/types.hpp"

#include <cmath>
#include <string>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void SpectralGrid::validate() const {
  if (n_points < 1024 || !is_power_of_two(n_points))
    throw ConfigError("grid n_points must be a power of two >= 1024");
  if (!(span > 0.0) || !std::isfinite(span)) throw ConfigError("grid span must be > 0 and finite");
}

void ComplexSpectrum::validate() const {
  grid.validate();
  if (values.size() != grid.n_points)
    throw ConfigError("spectrum length does not match grid n_points");
}

double TemporalWavefunction::spacing() const {
  if (tau.size() < 2) throw ConfigError("temporal grid needs at least 2 samples");
  return (tau.back() - tau.front()) / static_cast<double>(tau.size() - 1);
}

void TemporalWavefunction::validate() const {
  if (tau.size() != values.size()) throw ConfigError("temporal grid/value length mismatch");
  if (tau.size() < 3 || tau.size() % 2 == 0)
    throw ConfigError("temporal grid must have an odd number of samples (>= 3) centred on tau = 0");
  const double dt = spacing();
  if (!(dt > 0.0)) throw ConfigError("temporal grid must be strictly increasing");
  const double tol = 1e-6 * dt;
  for (std::size_t k = 0; k < tau.size(); ++k) {
    if (std::abs(tau[k] + tau[tau.size() - 1 - k]) > tol)
      throw ConfigError("temporal grid is not symmetric about tau = 0");
    if (k > 0 && std::abs((tau[k] - tau[k - 1]) - dt) > tol)
      throw ConfigError("temporal grid is not uniform");
    if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag()))
      throw ConfigError("temporal amplitude contains non-finite samples");
  }
  if (!(carrier_omega > 0.0)) throw ConfigError("carrier_omega must be > 0");
}

void DetectionParams::validate() const {
  if (!(duty_cycle_xi > 0.0 && duty_cycle_xi <= 1.0))
    throw ConfigError("duty_cycle_xi must lie in (0, 1]");
  if (!(efficiency_eta > 0.0 && efficiency_eta <= 1.0))
    throw ConfigError("efficiency_eta must lie in (0, 1]");
  if (!(acquisition_T > 0.0)) throw ConfigError("acquisition_T must be > 0");
  if (!(bin_dt > 0.0)) throw ConfigError("bin_dt must be > 0");
}

void CoincidenceHistogram::validate() const {
  if (tau_bins.size() != counts.size()) throw ConfigError("histogram bin/count length mismatch");
  if (tau_bins.empty()) throw ConfigError("histogram is empty");
  if (!(bin_dt > 0.0)) throw ConfigError("bin_dt must be > 0");
  const double tol = 1e-6 * bin_dt;
  for (std::size_t k = 0; k < tau_bins.size(); ++k) {
    if (k > 0 && std::abs((tau_bins[k] - tau_bins[k - 1]) - bin_dt) > tol)
      throw ConfigError("histogram bin centres are not uniform with spacing bin_dt");
    if (!(counts[k] >= 0.0) || !std::isfinite(counts[k]))
      throw ConfigError("histogram counts must be finite and >= 0");
  }
}

}  // namespace biphoton
