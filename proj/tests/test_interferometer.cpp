#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "biphoton/core.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/interferometer.hpp"

using namespace biphoton;

namespace {

/// Hand-built symmetrized pair on a 1 ns lattice: Gaussian modulus times an
/// arbitrary injected phase.  Battery delays of 1 ns then land on exact
/// samples, so every interferometer quantity is free of interpolation error.
SymmetrizedPair injected_pair(const std::function<double(double)>& phase, long half_points = 400) {
  TemporalWavefunction psi;
  psi.carrier_omega = two_pi * speed_of_light / 795e-9;
  for (long k = -half_points; k <= half_points; ++k) {
    const double tau = static_cast<double>(k) * 1e-9;
    const double modulus = std::exp(-(tau * tau) / (150e-9 * 150e-9));
    psi.tau.push_back(tau);
    psi.values.push_back(std::polar(modulus, phase(tau)));
  }
  SymmetrizedPair pair;
  pair.psi_plus = psi;
  pair.psi_minus = psi;
  for (Complex& v : pair.psi_minus.values) v = Complex{0.0, 0.0};
  return pair;
}

double max_masked_error_mod_const(const PhaseProfile& profile,
                                  const std::function<double(double)>& injected) {
  double offset = 0.0;
  bool have_offset = false;
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.tau.size(); ++i) {
    if (!profile.mask[i]) continue;
    const double err = profile.phi[i] - injected(profile.tau[i]);
    if (!have_offset) {
      offset = err;
      have_offset = true;
    }
    worst = std::max(worst, std::abs(err - offset));
  }
  REQUIRE(have_offset);
  return worst;
}

}  // namespace

TEST_CASE("projection settings must be unit Jones vectors") {
  ProjectionSetting bad{{0.8, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  CHECK_NOTHROW(ProjectionSetting::right_circular().validate());
}

TEST_CASE("interference counts match a direct evaluation of the path amplitude") {
  const SymmetrizedPair pair = injected_pair([](double tau) { return 0.8 * std::sin(tau / 40e-9); });
  DetectionParams detection;                // 2 ns bins
  const double delay = 3e-9;                // on-lattice: samples are exact
  const auto p3 = ProjectionSetting::right_circular();
  const auto p4 = ProjectionSetting::antidiagonal();
  const CoincidenceHistogram hist = interfere(pair, delay, p3, p4, detection);

  const Complex c1 = std::conj(p3.h) * std::conj(p4.v);
  const Complex c2 = std::conj(p3.v) * std::conj(p4.h);
  const std::size_t centre_sample = pair.psi_plus.tau.size() / 2;
  for (const long k : {-150L, -7L, 0L, 42L, 198L}) {
    const std::size_t bin = static_cast<std::size_t>(k + (static_cast<long>(hist.counts.size()) - 1) / 2);
    const long node = 2 * k;  // 2 ns bins on a 1 ns lattice
    const Complex u = pair.psi_plus.values[static_cast<std::size_t>(static_cast<long>(centre_sample) + node - 3)];
    const Complex v = pair.psi_plus.values[static_cast<std::size_t>(static_cast<long>(centre_sample) + node + 3)];
    const double expected = 0.25 * detection.counts_prefactor() * std::norm(c1 * u + c2 * v);
    CHECK(hist.counts[bin] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("splitter outputs conserve the pair flux") {
  const SymmetrizedPair pair = injected_pair([](double) { return 0.4; });
  const DetectionParams detection;
  const auto h = ProjectionSetting::horizontal();
  const auto v = ProjectionSetting::vertical();
  const auto d = ProjectionSetting::diagonal();
  const auto a = ProjectionSetting::antidiagonal();

  // At zero delay both paths sample the same amplitude, so twice the sum over
  // the four H/V analyzer combinations reproduces the undisturbed bosonic
  // coincidence histogram bin by bin.
  const CoincidenceHistogram c_plus = coincidence_counts(pair, detection, ExchangeSign::Plus);
  const CoincidenceHistogram hv = interfere(pair, 0.0, h, v, detection);
  const CoincidenceHistogram vh = interfere(pair, 0.0, v, h, detection);
  const CoincidenceHistogram hh = interfere(pair, 0.0, h, h, detection);
  const CoincidenceHistogram vv = interfere(pair, 0.0, v, v, detection);
  REQUIRE(hv.counts.size() == c_plus.counts.size());
  for (std::size_t i = 0; i < c_plus.counts.size(); ++i) {
    const double total = 2.0 * (hv.counts[i] + vh.counts[i] + hh.counts[i] + vv.counts[i]);
    CHECK(total == doctest::Approx(c_plus.counts[i]).epsilon(1e-12));
  }

  // Summing over a complete analyzer basis at port 4 with port 3 fixed to D
  // projects out exactly half of the pair flux, at any delay.
  const CoincidenceHistogram dd = interfere(pair, 4e-9, d, d, detection);
  const CoincidenceHistogram da = interfere(pair, 4e-9, d, a, detection);
  const CoincidenceHistogram hv4 = interfere(pair, 4e-9, h, v, detection);
  const CoincidenceHistogram vh4 = interfere(pair, 4e-9, v, h, detection);
  for (std::size_t i = 0; i < dd.counts.size(); ++i)
    CHECK(2.0 * (dd.counts[i] + da.counts[i]) ==
          doctest::Approx(hv4.counts[i] + vh4.counts[i]).epsilon(1e-12));
}

TEST_CASE("quadrature differences read out the phase increment") {
  const auto injected = [](double tau) { return 8e5 * (tau * 1e9) + 0.3; };
  const SymmetrizedPair pair = injected_pair([&](double tau) { return injected(tau) * 1e-6; });
  const DetectionParams detection;
  const double delay = 1e-9;
  const auto d = ProjectionSetting::diagonal();
  const auto a = ProjectionSetting::antidiagonal();
  const auto r = ProjectionSetting::right_circular();

  const CoincidenceHistogram dd = interfere(pair, delay, d, d, detection);
  const CoincidenceHistogram da = interfere(pair, delay, d, a, detection);
  const CoincidenceHistogram rd = interfere(pair, delay, r, d, detection);
  const CoincidenceHistogram ra = interfere(pair, delay, r, a, detection);

  auto phase_at = [&](double tau) { return injected(tau) * 1e-6; };
  for (std::size_t i = 0; i < dd.counts.size(); i += 25) {
    const double tau = dd.tau_bins[i];
    const double measured = std::atan2(rd.counts[i] - ra.counts[i], dd.counts[i] - da.counts[i]);
    const double expected = phase_at(tau + delay) - phase_at(tau - delay);
    CHECK(measured == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("battery covers the twelve standard settings") {
  const auto battery = default_setting_battery({1e-9, 5.8e-9});
  REQUIRE(battery.size() == 12);
  CHECK(battery[0].label == "DD");
  CHECK(battery[5].label == "VH");
  CHECK(battery[6].delay_dt == 5.8e-9);

  const SymmetrizedPair pair = injected_pair([](double) { return 0.0; }, 100);
  const auto measurements = measure_battery(pair, {1e-9, 5.8e-9}, DetectionParams{});
  REQUIRE(measurements.size() == 2);
  CHECK(measurements[0].histograms.size() == 6);
  CHECK(measurements[1].settings[2].label == "RD");
}

TEST_CASE("phase reconstruction round-trips an injected linear phase") {
  const auto injected = [](double tau) { return 1.2e7 * tau; };
  const SymmetrizedPair pair = injected_pair(injected);
  const DetectionParams detection;
  const CoincidenceHistogram amplitude = coincidence_counts(pair, detection, ExchangeSign::Plus);
  const auto measurements = measure_battery(pair, {1e-9, 5.8e-9}, detection);

  const PhaseProfile profile = reconstruct_phase(measurements, amplitude);
  CHECK(max_masked_error_mod_const(profile, injected) < 1e-9);
  // The 5.8 ns delay samples the wavefunction off its 1 ns lattice nodes, so
  // the cross-check inherits the cubic-interpolation phase error of the
  // measured amplitudes (fourth order in slope x spacing, here ~1e-7 rad).
  CHECK(profile.coarse_delay_max_discrepancy < 1e-5);
  CHECK(phase_asymmetry(profile) > 0.0);  // an odd phase is maximally asymmetric
}

TEST_CASE("a flat-phase pair reconstructs to exactly zero") {
  const SymmetrizedPair pair = injected_pair([](double) { return 0.0; });
  const DetectionParams detection;
  const CoincidenceHistogram amplitude = coincidence_counts(pair, detection, ExchangeSign::Plus);
  const auto measurements = measure_battery(pair, {1e-9}, detection);

  const PhaseProfile profile = reconstruct_phase(measurements, amplitude);
  for (std::size_t i = 0; i < profile.phi.size(); ++i)
    if (profile.mask[i]) CHECK(profile.phi[i] == 0.0);
  CHECK(phase_asymmetry(profile) == 0.0);
  CHECK(std::isnan(profile.coarse_delay_max_discrepancy));  // single delay, nothing to check
}

TEST_CASE("reconstruction failure modes are diagnosed") {
  const SymmetrizedPair pair = injected_pair([](double) { return 0.0; }, 100);
  const DetectionParams detection;
  const CoincidenceHistogram amplitude = coincidence_counts(pair, detection, ExchangeSign::Plus);

  // Missing quadrature settings: battery with only H/V, V/H.
  InterferenceMeasurement partial;
  partial.delay_dt = 1e-9;
  partial.settings = {{1e-9, ProjectionSetting::horizontal(), ProjectionSetting::vertical(), "HV"}};
  partial.histograms = {interfere(pair, 1e-9, ProjectionSetting::horizontal(),
                                  ProjectionSetting::vertical(), detection)};
  CHECK_THROWS_AS(reconstruct_phase({partial}, amplitude), DomainError);

  // Fine delay incommensurate with the binning cannot step the chain.
  const auto measurements = measure_battery(pair, {0.7e-9}, detection);
  CHECK_THROWS_AS(reconstruct_phase(measurements, amplitude), DomainError);

  // Delay beyond the wavefunction's range is a configuration error.
  CHECK_THROWS_AS(interfere(pair, 150e-9, ProjectionSetting::diagonal(),
                            ProjectionSetting::diagonal(), detection),
                  ConfigError);
}
