#pragma once

#include <cstddef>
#include <vector>

#include "biphoton/units.hpp"

namespace biphoton {

/// Uniform detuning grid varpi_j = (j - n/2) * span / n, j = 0 .. n-1,
/// centred on zero and covering [-span/2, span/2).
struct SpectralGrid {
  std::size_t n_points = 16384;   ///< power of two, >= 1024
  double span = two_pi * 400e6;   ///< total angular-frequency width [rad/s]

  double spacing() const { return span / static_cast<double>(n_points); }
  double omega(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n_points) / 2.0) * spacing();
  }

  /// Largest usable |tau| of the conjugate time grid, (n/2 - 1) * 2*pi/span.
  double max_tau() const {
    return (static_cast<double>(n_points) / 2.0 - 1.0) * (two_pi / span);
  }

  void validate() const;

  friend bool operator==(const SpectralGrid&, const SpectralGrid&) = default;
};

/// Complex amplitude sampled on a SpectralGrid.
struct ComplexSpectrum {
  SpectralGrid grid;
  std::vector<Complex> values;  ///< values[j] at grid.omega(j)

  void validate() const;
};

/// Complex temporal amplitude on a uniform grid of relative detection times,
/// symmetric about tau = 0, together with the optical carrier it rides on.
struct TemporalWavefunction {
  std::vector<double> tau;      ///< [s], uniformly spaced, tau[k] = -tau[size-1-k]
  std::vector<Complex> values;  ///< amplitude at each tau
  double carrier_omega = 0.0;   ///< carrier angular frequency [rad/s]

  double spacing() const;
  std::size_t centre_index() const { return tau.size() / 2; }

  void validate() const;
};

/// Bosonic / fermionic symmetrizations of one two-photon amplitude:
/// psi_plus(tau) = psi(tau) + psi(-tau) (even),
/// psi_minus(tau) = psi(tau) - psi(-tau) (odd).
struct SymmetrizedPair {
  TemporalWavefunction psi_plus;
  TemporalWavefunction psi_minus;
};

/// Detector and acquisition parameters mapping |psi|^2 to expected counts.
struct DetectionParams {
  double duty_cycle_xi = 0.015;     ///< experiment duty cycle (0, 1]
  double efficiency_eta = 0.05;     ///< total detection efficiency (0, 1]
  double acquisition_T = 1200.0;    ///< total acquisition time [s] (> 0)
  double bin_dt = 2e-9;             ///< histogram bin width [s] (> 0)

  double counts_prefactor() const {
    return duty_cycle_xi * efficiency_eta * acquisition_T * bin_dt;
  }

  void validate() const;

  friend bool operator==(const DetectionParams&, const DetectionParams&) = default;
};

/// Expected (or measured) coincidence counts per time bin.
struct CoincidenceHistogram {
  std::vector<double> tau_bins;  ///< bin centres [s], uniform spacing = bin_dt
  std::vector<double> counts;    ///< non-negative expected counts per bin
  double bin_dt = 2e-9;          ///< bin width [s]

  void validate() const;
};

enum class ExchangeSign { Plus, Minus };

}  // namespace biphoton
