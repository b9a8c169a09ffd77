#include "biphoton/core.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <cstdlib>
#include <string>

#include "biphoton/errors.hpp"

namespace biphoton {

ComplexSpectrum build_spectral_amplitude(const SpectralGrid& grid, const AtomicMedium& medium,
                                         const DriveLasers& lasers, PhaseMatchConvention convention) {
  grid.validate();
  medium.validate();
  lasers.validate();
  ComplexSpectrum spectrum{grid, std::vector<Complex>(grid.n_points)};
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    const double varpi = grid.omega(j);
    spectrum.values[j] =
        coupling_kappa(varpi, medium, lasers) * phase_matching(varpi, medium, lasers, convention);
  }
  return spectrum;
}

TemporalWavefunction temporal_wavefunction(const ComplexSpectrum& spectrum,
                                           const AtomicMedium& medium, double tau_max) {
  spectrum.validate();
  medium.validate();
  if (!(tau_max > 0.0)) throw ConfigError("tau_max must be > 0");

  const std::size_t n = spectrum.grid.n_points;
  const double dvarpi = spectrum.grid.spacing();
  const double dtau = two_pi / spectrum.grid.span;
  // floor with a small forward nudge so tau_max equal to an exact multiple of
  // dtau is not lost to rounding in the division.
  const auto half_count = static_cast<std::size_t>(std::floor(tau_max / dtau + 1e-6));
  if (half_count > n / 2 - 1)
    throw ConfigError("tau_max = " + std::to_string(tau_max * 1e9) +
                      " ns exceeds the temporal window of the grid (max " +
                      std::to_string(spectrum.grid.max_tau() * 1e9) + " ns); enlarge n_points or span");

  // The sum over the centred grid maps onto a standard forward DFT after
  // alternating the signs of input and output samples:
  //   sum_j v_j exp(-i varpi_j tau_m)
  //     = (-1)^m * (-1)^(n/2) * DFT[v_j * (-1)^j]_m       (varpi_j = (j - n/2) dvarpi,
  //                                                        tau_m = (m - n/2) dtau).
  std::vector<Complex> staggered(n);
  for (std::size_t j = 0; j < n; ++j)
    staggered[j] = (j % 2 == 0) ? spectrum.values[j] : -spectrum.values[j];

  Eigen::FFT<double> fft;
  std::vector<Complex> transformed(n);
  fft.fwd(transformed, staggered);

  const double centre_sign = (n / 2 % 2 == 0) ? 1.0 : -1.0;
  const double prefactor = medium.length_L / two_pi * dvarpi * centre_sign;

  TemporalWavefunction psi;
  psi.carrier_omega = medium.carrier_omega();
  psi.tau.resize(2 * half_count + 1);
  psi.values.resize(2 * half_count + 1);
  const std::size_t first = n / 2 - half_count;
  for (std::size_t i = 0; i < psi.tau.size(); ++i) {
    const std::size_t m = first + i;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    psi.tau[i] = (static_cast<double>(m) - static_cast<double>(n) / 2.0) * dtau;
    psi.values[i] = prefactor * sign * transformed[m];
  }
  psi.validate();
  return psi;
}

SymmetrizedPair symmetrize(const TemporalWavefunction& psi) {
  psi.validate();
  SymmetrizedPair pair{psi, psi};
  const std::size_t n = psi.tau.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex direct = psi.values[k];
    const Complex mirror = psi.values[n - 1 - k];
    pair.psi_plus.values[k] = direct + mirror;
    pair.psi_minus.values[k] = direct - mirror;
  }
  return pair;
}

namespace {

/// Linear interpolation of the complex amplitude at time t.  Targets within
/// 1e-6 grid units of a sample snap to it, so times that are grid points up
/// to rounding return the stored sample bit-for-bit.
Complex sample_linear(const TemporalWavefunction& w, double t) {
  const double dt = w.spacing();
  double s = (t - w.tau.front()) / dt;
  const double top = static_cast<double>(w.tau.size() - 1);
  if (s < 0.0) s = 0.0;
  if (s > top) s = top;
  const double nearest = std::round(s);
  if (std::abs(s - nearest) < 1e-6) return w.values[static_cast<std::size_t>(nearest)];
  const auto i0 = static_cast<std::size_t>(s);
  const double f = s - static_cast<double>(i0);
  return (1.0 - f) * w.values[i0] + f * w.values[i0 + 1];
}

}  // namespace

CoincidenceHistogram coincidence_counts(const SymmetrizedPair& pair, const DetectionParams& detection,
                                        ExchangeSign sign) {
  detection.validate();
  const TemporalWavefunction& w = (sign == ExchangeSign::Plus) ? pair.psi_plus : pair.psi_minus;
  w.validate();

  const double tau_max = w.tau.back();
  const auto half_bins = static_cast<long>(std::floor(tau_max / detection.bin_dt + 1e-6));
  if (half_bins < 1) throw ConfigError("bin_dt too coarse for the wavefunction's time range");

  const double prefactor = detection.counts_prefactor();
  CoincidenceHistogram hist;
  hist.bin_dt = detection.bin_dt;
  hist.tau_bins.resize(2 * half_bins + 1);
  hist.counts.resize(2 * half_bins + 1);
  for (long k = -half_bins; k <= half_bins; ++k) {
    const std::size_t i = static_cast<std::size_t>(k + half_bins);
    hist.tau_bins[i] = static_cast<double>(k) * detection.bin_dt;
    // |psi_pm| is even for a symmetrized pair, so sampling at |tau_c| keeps
    // mirrored bins bit-identical and pins C_minus(0) to exactly zero.
    const double t = static_cast<double>(std::labs(k)) * detection.bin_dt;
    hist.counts[i] = prefactor * std::norm(sample_linear(w, t));
  }
  hist.validate();
  return hist;
}

}  // namespace biphoton
