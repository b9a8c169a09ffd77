#pragma once

#include "biphoton/medium.hpp"
#include "biphoton/types.hpp"

namespace biphoton {

/// Two-photon spectral amplitude kappa(varpi) * Phi(varpi) sampled on the grid.
ComplexSpectrum build_spectral_amplitude(const SpectralGrid& grid, const AtomicMedium& medium,
                                         const DriveLasers& lasers,
                                         PhaseMatchConvention convention = PhaseMatchConvention::WithLength);

/// Temporal two-photon amplitude
///   psi(tau) = (L / 2*pi) * dvarpi * sum_j values[j] * exp(-i * varpi_j * tau),
/// evaluated by FFT on the conjugate grid tau_m = (m - n/2) * 2*pi/span and
/// sliced to |tau| <= tau_max.  The result carries the photon carrier frequency.
TemporalWavefunction temporal_wavefunction(const ComplexSpectrum& spectrum,
                                           const AtomicMedium& medium, double tau_max = 500e-9);

/// Bosonic/fermionic symmetrizations psi(tau) +/- psi(-tau).  Mirror samples
/// are combined index-by-index, so psi_plus is even and psi_minus odd to the
/// last bit.
SymmetrizedPair symmetrize(const TemporalWavefunction& psi);

/// Expected coincidence histogram
///   C(tau_c) = xi * eta * T * dt * |psi_pm(tau_c)|^2
/// on bin centres tau_c = k * bin_dt covering the wavefunction's range.
/// The amplitude is interpolated linearly (in the complex values) at |tau_c|,
/// which is exact on shared grid points and keeps the histogram even in
/// floating point; C_minus(0) vanishes identically.
CoincidenceHistogram coincidence_counts(const SymmetrizedPair& pair, const DetectionParams& detection,
                                        ExchangeSign sign);

}  // namespace biphoton
