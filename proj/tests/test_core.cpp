#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "biphoton/core.hpp"
#include "biphoton/errors.hpp"

using namespace biphoton;

namespace {

AtomicMedium medium_at(double od) {
  AtomicMedium medium;
  medium.optical_depth = od;
  return medium;
}

/// Direct Riemann-sum evaluation of the inverse transform, independent of the
/// FFT path.
Complex quadrature_psi(const ComplexSpectrum& spectrum, const AtomicMedium& medium, double tau) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < spectrum.grid.n_points; ++j)
    sum += spectrum.values[j] * std::polar(1.0, -spectrum.grid.omega(j) * tau);
  return medium.length_L / two_pi * spectrum.grid.spacing() * sum;
}

double rel_err(Complex computed, Complex expected) {
  return std::abs(computed - expected) / std::abs(expected);
}

}  // namespace

TEST_CASE("FFT inverse transform agrees with the direct quadrature") {
  const AtomicMedium medium = medium_at(7.0);
  const DriveLasers lasers;
  const SpectralGrid grid{1024, two_pi * 400e6};
  const ComplexSpectrum spectrum = build_spectral_amplitude(grid, medium, lasers);
  const TemporalWavefunction psi = temporal_wavefunction(spectrum, medium, 100e-9);

  double peak = 0.0;
  for (const Complex& v : psi.values) peak = std::max(peak, std::abs(v));
  REQUIRE(peak > 0.0);
  for (std::size_t i = 0; i < psi.tau.size(); ++i) {
    const Complex expected = quadrature_psi(spectrum, medium, psi.tau[i]);
    CHECK(std::abs(psi.values[i] - expected) / peak < 1e-9);
  }
}

TEST_CASE("temporal grid is the conjugate lattice of the spectral grid") {
  const AtomicMedium medium = medium_at(7.0);
  const SpectralGrid grid;  // 16384 points, 2*pi*400 MHz
  const ComplexSpectrum spectrum = build_spectral_amplitude(grid, medium, DriveLasers{});
  const TemporalWavefunction psi = temporal_wavefunction(spectrum, medium, 500e-9);

  CHECK(psi.tau.size() == 401);  // 500 ns / 2.5 ns = 200 samples per side
  CHECK(psi.tau.front() == -psi.tau.back());
  CHECK(psi.tau[psi.centre_index()] == 0.0);
  CHECK(std::abs(psi.spacing() - two_pi / grid.span) < 1e-23);
  CHECK(psi.carrier_omega == medium.carrier_omega());
}

TEST_CASE("wavefunction values at +/-30 ns match the quadrature oracle") {
  const AtomicMedium medium = medium_at(7.0);
  const ComplexSpectrum spectrum = build_spectral_amplitude(SpectralGrid{}, medium, DriveLasers{});
  const TemporalWavefunction psi = temporal_wavefunction(spectrum, medium, 500e-9);
  const SymmetrizedPair pair = symmetrize(psi);

  const std::size_t centre = psi.centre_index();
  const std::size_t steps = 12;  // 30 ns at 2.5 ns spacing
  REQUIRE(psi.tau[centre + steps] == doctest::Approx(30e-9).epsilon(1e-12));

  const Complex fwd = quadrature_psi(spectrum, medium, psi.tau[centre + steps]);
  const Complex bwd = quadrature_psi(spectrum, medium, psi.tau[centre - steps]);
  CHECK(rel_err(pair.psi_plus.values[centre + steps], fwd + bwd) < 1e-6);
  CHECK(rel_err(pair.psi_minus.values[centre + steps], fwd - bwd) < 1e-6);
}

TEST_CASE("symmetrized pair is even/odd to the last bit and decomposes back") {
  const AtomicMedium medium = medium_at(25.0);
  const ComplexSpectrum spectrum = build_spectral_amplitude(SpectralGrid{}, medium, DriveLasers{});
  const TemporalWavefunction psi = temporal_wavefunction(spectrum, medium, 500e-9);
  const SymmetrizedPair pair = symmetrize(psi);

  const std::size_t n = psi.tau.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t m = n - 1 - k;
    CHECK(pair.psi_plus.values[k] == pair.psi_plus.values[m]);
    CHECK(pair.psi_minus.values[k] == -pair.psi_minus.values[m]);
    const Complex sum = pair.psi_plus.values[k] + pair.psi_minus.values[k];
    const Complex twice = 2.0 * psi.values[k];
    if (std::abs(twice) > 0.0) CHECK(std::abs(sum - twice) / std::abs(twice) < 1e-12);
  }
  CHECK(pair.psi_minus.values[psi.centre_index()] == Complex{0.0, 0.0});
}

TEST_CASE("discrete Parseval identity ties the two domains together") {
  const AtomicMedium medium = medium_at(7.0);
  const SpectralGrid grid;
  const ComplexSpectrum spectrum = build_spectral_amplitude(grid, medium, DriveLasers{});
  // Full usable window: every FFT output sample except the single m = 0 edge
  // point at tau = -(n/2) dtau, whose weight is below double precision here.
  const TemporalWavefunction psi = temporal_wavefunction(spectrum, medium, grid.max_tau());
  REQUIRE(psi.tau.size() == grid.n_points - 1);

  const double dtau = two_pi / grid.span;
  double time_side = 0.0;
  for (const Complex& v : psi.values) time_side += std::norm(v) * dtau;
  double spectral_side = 0.0;
  for (const Complex& v : spectrum.values) spectral_side += std::norm(v);
  spectral_side *= medium.length_L * medium.length_L * grid.spacing() / two_pi;
  CHECK(std::abs(time_side - spectral_side) / spectral_side < 1e-9);
}

TEST_CASE("coincidence histograms are even, non-negative, and pinned at zero delay") {
  const AtomicMedium medium = medium_at(7.0);
  const ComplexSpectrum spectrum = build_spectral_amplitude(SpectralGrid{}, medium, DriveLasers{});
  const TemporalWavefunction psi = temporal_wavefunction(spectrum, medium, 500e-9);
  const SymmetrizedPair pair = symmetrize(psi);
  const DetectionParams detection;

  const CoincidenceHistogram c_plus = coincidence_counts(pair, detection, ExchangeSign::Plus);
  const CoincidenceHistogram c_minus = coincidence_counts(pair, detection, ExchangeSign::Minus);
  REQUIRE(c_plus.tau_bins.size() == 501);  // +/- 500 ns in 2 ns bins
  const std::size_t n = c_plus.counts.size();
  const std::size_t centre = n / 2;
  CHECK(c_plus.tau_bins[centre] == 0.0);
  CHECK(c_minus.counts[centre] == 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    CHECK(c_plus.counts[k] == c_plus.counts[n - 1 - k]);
    CHECK(c_minus.counts[k] == c_minus.counts[n - 1 - k]);
    CHECK(c_plus.counts[k] >= 0.0);
  }

  const Complex psi0 = psi.values[psi.centre_index()];
  const double expected_peak = detection.counts_prefactor() * 4.0 * std::norm(psi0);
  CHECK(std::abs(c_plus.counts[centre] - expected_peak) <= 1e-15 * expected_peak);
}

TEST_CASE("grid and window invariants are enforced") {
  CHECK_THROWS_AS((SpectralGrid{512, two_pi * 400e6}.validate()), ConfigError);
  CHECK_THROWS_AS((SpectralGrid{1000, two_pi * 400e6}.validate()), ConfigError);

  const AtomicMedium medium = medium_at(7.0);
  const SpectralGrid grid{1024, two_pi * 400e6};
  const ComplexSpectrum spectrum = build_spectral_amplitude(grid, medium, DriveLasers{});
  CHECK_THROWS_AS(temporal_wavefunction(spectrum, medium, 1e-3), ConfigError);

  DetectionParams detection;
  detection.efficiency_eta = 1.5;
  CHECK_THROWS_AS(detection.validate(), ConfigError);
}

TEST_CASE("symmetrize rejects grids that are not centred") {
  TemporalWavefunction crooked;
  crooked.tau = {0.0, 1e-9, 2e-9};
  crooked.values = {{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
  crooked.carrier_omega = 1.0;
  CHECK_THROWS_AS(symmetrize(crooked), ConfigError);
}
