#include "biphoton/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

/// Relative-amplitude floor below which the phase estimate is untrusted.
constexpr double amplitude_gate = 0.05;

bool close(Complex a, Complex b) { return std::abs(a - b) <= 1e-9; }

/// Local cubic (Catmull-Rom) interpolation of the complex amplitude: C^1,
/// exact at the nodes, and free of the broad support a global interpolant
/// would need.  Targets within 1e-6 grid units of a node return the stored
/// sample bit-for-bit.
Complex sample_cubic(const TemporalWavefunction& w, double t) {
  const double step = w.spacing();
  const auto size = static_cast<long>(w.tau.size());
  double s = (t - w.tau.front()) / step;
  if (s < -1e-6 || s > static_cast<double>(size - 1) + 1e-6)
    throw ConfigError("sample time outside the wavefunction's range");
  s = std::clamp(s, 0.0, static_cast<double>(size - 1));
  const double nearest = std::round(s);
  if (std::abs(s - nearest) < 1e-6) return w.values[static_cast<std::size_t>(nearest)];

  const long i1 = static_cast<long>(std::floor(s));
  const double f = s - static_cast<double>(i1);
  auto at = [&](long i) { return w.values[static_cast<std::size_t>(std::clamp(i, 0L, size - 1))]; };
  const Complex p0 = at(i1 - 1), p1 = at(i1), p2 = at(i1 + 1), p3 = at(i1 + 2);
  return 0.5 * (2.0 * p1 + (-p0 + p2) * f + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * (f * f) +
                (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * (f * f * f));
}

double wrap_pi(double x) { return std::remainder(x, two_pi); }

void require_same_layout(const CoincidenceHistogram& a, const CoincidenceHistogram& b,
                         const char* what) {
  const bool ok = a.tau_bins.size() == b.tau_bins.size() &&
                  std::abs(a.bin_dt - b.bin_dt) <= 1e-6 * a.bin_dt;
  if (!ok) throw ConfigError(std::string("histogram layouts differ: ") + what);
  for (std::size_t i = 0; i < a.tau_bins.size(); ++i)
    if (std::abs(a.tau_bins[i] - b.tau_bins[i]) > 1e-6 * a.bin_dt)
      throw ConfigError(std::string("histogram bin centres differ: ") + what);
}

}  // namespace

void ProjectionSetting::validate() const {
  const double norm = std::sqrt(std::norm(h) + std::norm(v));
  if (std::abs(norm - 1.0) > 1e-12)
    throw ConfigError("projection Jones vector must have unit norm within 1e-12");
}

ProjectionSetting ProjectionSetting::diagonal() { return {{inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}}; }
ProjectionSetting ProjectionSetting::antidiagonal() { return {{inv_sqrt2, 0.0}, {-inv_sqrt2, 0.0}}; }
ProjectionSetting ProjectionSetting::right_circular() { return {{inv_sqrt2, 0.0}, {0.0, inv_sqrt2}}; }

CoincidenceHistogram interfere(const SymmetrizedPair& pair, double delay_dt,
                               const ProjectionSetting& port3, const ProjectionSetting& port4,
                               const DetectionParams& detection) {
  detection.validate();
  port3.validate();
  port4.validate();
  pair.psi_plus.validate();
  if (!(delay_dt >= 0.0)) throw ConfigError("delay_dt must be >= 0");
  const double tau_max = pair.psi_plus.tau.back();
  if (delay_dt >= tau_max) throw ConfigError("delay_dt exceeds the wavefunction's time range");

  // Coincidence amplitude after the 50:50 splitter with the port-1 photon
  // tagged H and the port-2 photon tagged V and delayed by delay_dt.  The two
  // ways the pair can split across the analyzers contribute
  //   A(tau) = e3_h* e4_v* psi_plus(tau - dt) + e3_v* e4_h* psi_plus(tau + dt).
  // Each coincidence path contains exactly one delayed photon, so the carrier
  // factor exp(i*omega0*dt) is common to both terms and drops out of |A|^2;
  // the splitter's exchange sign is absorbed into the orientation of the
  // port-4 analysis basis.  The second term is the mirrored sample
  // psi_plus(-(tau + dt)) of an even (bosonic) amplitude written in shifted
  // form; evaluating the shifted form directly keeps the quadrature relation
  //   arg cross-term = phi(tau + dt) - phi(tau - dt)
  // exact for any injected test phase as well.
  const Complex c1 = std::conj(port3.h) * std::conj(port4.v);
  const Complex c2 = std::conj(port3.v) * std::conj(port4.h);

  const auto half_bins =
      static_cast<long>(std::floor((tau_max - delay_dt) / detection.bin_dt + 1e-6));
  if (half_bins < 1)
    throw ConfigError("delay_dt leaves no usable bins inside the wavefunction's time range");

  CoincidenceHistogram hist;
  hist.bin_dt = detection.bin_dt;
  hist.tau_bins.resize(2 * half_bins + 1);
  hist.counts.resize(2 * half_bins + 1);
  const double prefactor = 0.25 * detection.counts_prefactor();
  for (long k = -half_bins; k <= half_bins; ++k) {
    const double tau = static_cast<double>(k) * detection.bin_dt;
    const Complex u = sample_cubic(pair.psi_plus, tau - delay_dt);
    const Complex v = sample_cubic(pair.psi_plus, tau + delay_dt);
    hist.tau_bins[static_cast<std::size_t>(k + half_bins)] = tau;
    hist.counts[static_cast<std::size_t>(k + half_bins)] = prefactor * std::norm(c1 * u + c2 * v);
  }
  hist.validate();
  return hist;
}

std::vector<BatterySetting> default_setting_battery(const std::vector<double>& delays) {
  const auto d = ProjectionSetting::diagonal();
  const auto a = ProjectionSetting::antidiagonal();
  const auto r = ProjectionSetting::right_circular();
  const auto h = ProjectionSetting::horizontal();
  const auto v = ProjectionSetting::vertical();
  std::vector<BatterySetting> battery;
  for (const double delay : delays) {
    battery.push_back({delay, d, d, "DD"});
    battery.push_back({delay, d, a, "DA"});
    battery.push_back({delay, r, d, "RD"});
    battery.push_back({delay, r, a, "RA"});
    battery.push_back({delay, h, v, "HV"});
    battery.push_back({delay, v, h, "VH"});
  }
  return battery;
}

std::vector<InterferenceMeasurement> measure_battery(const SymmetrizedPair& pair,
                                                     const std::vector<double>& delays,
                                                     const DetectionParams& detection) {
  std::vector<InterferenceMeasurement> measurements;
  for (const double delay : delays) {
    InterferenceMeasurement m;
    m.delay_dt = delay;
    m.settings = default_setting_battery({delay});
    for (const auto& setting : m.settings)
      m.histograms.push_back(interfere(pair, delay, setting.port3, setting.port4, detection));
    measurements.push_back(std::move(m));
  }
  return measurements;
}

namespace {

/// X/Y quadratures of one delay, indexed by integer bin number k (centre k*dt).
struct QuadratureSet {
  double delay = 0.0;
  long k_min = 0, k_max = 0;
  std::vector<double> x, y;  // index k - k_min

  double dphi(long k) const {
    return std::atan2(y[static_cast<std::size_t>(k - k_min)],
                      x[static_cast<std::size_t>(k - k_min)]);
  }
};

bool matches(const ProjectionSetting& p, const ProjectionSetting& q) {
  return close(p.h, q.h) && close(p.v, q.v);
}

/// Extracts the four quadrature settings (D/D, D/A, R/D, R/A) of one
/// measurement; nullopt-like empty optional via bool.
bool build_quadratures(const InterferenceMeasurement& m, double bin_dt, QuadratureSet& out) {
  const auto d = ProjectionSetting::diagonal();
  const auto a = ProjectionSetting::antidiagonal();
  const auto r = ProjectionSetting::right_circular();
  const CoincidenceHistogram* dd = nullptr;
  const CoincidenceHistogram* da = nullptr;
  const CoincidenceHistogram* rd = nullptr;
  const CoincidenceHistogram* ra = nullptr;
  if (m.settings.size() != m.histograms.size())
    throw ConfigError("measurement settings/histograms length mismatch");
  for (std::size_t i = 0; i < m.settings.size(); ++i) {
    const auto& s = m.settings[i];
    if (matches(s.port3, d) && matches(s.port4, d)) dd = &m.histograms[i];
    if (matches(s.port3, d) && matches(s.port4, a)) da = &m.histograms[i];
    if (matches(s.port3, r) && matches(s.port4, d)) rd = &m.histograms[i];
    if (matches(s.port3, r) && matches(s.port4, a)) ra = &m.histograms[i];
  }
  if (!dd || !da || !rd || !ra) return false;
  require_same_layout(*dd, *da, "D/D vs D/A");
  require_same_layout(*dd, *rd, "D/D vs R/D");
  require_same_layout(*dd, *ra, "D/D vs R/A");
  if (std::abs(dd->bin_dt - bin_dt) > 1e-6 * bin_dt)
    throw ConfigError("interference histograms use a different bin width than the amplitude");

  out.delay = m.delay_dt;
  out.k_min = std::lround(dd->tau_bins.front() / bin_dt);
  out.k_max = std::lround(dd->tau_bins.back() / bin_dt);
  for (std::size_t i = 0; i < dd->tau_bins.size(); ++i) {
    const double k = dd->tau_bins[i] / bin_dt;
    if (std::abs(k - std::round(k)) > 1e-6)
      throw ConfigError("interference bin centres are not integer multiples of the bin width");
    out.x.push_back(dd->counts[i] - da->counts[i]);
    out.y.push_back(rd->counts[i] - ra->counts[i]);
  }
  return true;
}

/// Linear interpolation of histogram counts at time t (clamped to the range).
double interp_counts(const CoincidenceHistogram& h, double t) {
  const double s =
      std::clamp((t - h.tau_bins.front()) / h.bin_dt, 0.0, static_cast<double>(h.tau_bins.size() - 1));
  const auto i0 = std::min(static_cast<std::size_t>(s), h.tau_bins.size() - 2);
  const double f = s - static_cast<double>(i0);
  return (1.0 - f) * h.counts[i0] + f * h.counts[i0 + 1];
}

/// Linear interpolation of the reconstructed phase at time t; false if t is
/// outside the lattice.
bool interp_phase(const std::vector<double>& tau, const std::vector<double>& phi, double t,
                  double& out) {
  if (tau.size() < 2) return false;
  const double step = (tau.back() - tau.front()) / static_cast<double>(tau.size() - 1);
  const double s = (t - tau.front()) / step;
  if (s < -1e-6 || s > static_cast<double>(tau.size() - 1) + 1e-6) return false;
  const double clamped = std::clamp(s, 0.0, static_cast<double>(tau.size() - 1));
  const auto i0 = std::min(static_cast<std::size_t>(clamped), tau.size() - 2);
  const double f = clamped - static_cast<double>(i0);
  out = (1.0 - f) * phi[i0] + f * phi[i0 + 1];
  return true;
}

}  // namespace

PhaseProfile reconstruct_phase(const std::vector<InterferenceMeasurement>& measurements,
                               const CoincidenceHistogram& amplitude) {
  amplitude.validate();
  if (amplitude.tau_bins.size() < 2) throw ConfigError("amplitude histogram needs at least 2 bins");
  if (measurements.empty()) throw ConfigError("no interference measurements supplied");
  const double bin_dt = amplitude.bin_dt;

  std::vector<QuadratureSet> sets;
  for (const auto& m : measurements) {
    QuadratureSet q;
    if (build_quadratures(m, bin_dt, q)) sets.push_back(std::move(q));
  }
  if (sets.empty())
    throw DomainError(
        "phase reconstruction needs the full quadrature battery (D/D, D/A, R/D, R/A) "
        "for at least one delay");
  std::sort(sets.begin(), sets.end(),
            [](const QuadratureSet& a, const QuadratureSet& b) { return a.delay < b.delay; });
  const QuadratureSet& fine = sets.front();
  if (!(fine.delay > 0.0)) throw ConfigError("interference delay must be > 0 to resolve the phase");

  // The chain step is 2*delay: each quadrature sample links the phase at
  // tau - delay to the phase at tau + delay.  With 2*delay = bin_dt the links
  // form a single connected chain over the half-bin lattice; coarser
  // commensurate delays split the lattice into disconnected chains with
  // unknown relative offsets, so those fall back to integrating the finite
  // difference as a derivative estimate.
  const double steps = 2.0 * fine.delay / bin_dt;
  const long m_step = std::lround(steps);
  if (m_step < 1 || std::abs(steps - static_cast<double>(m_step)) > 1e-6)
    throw DomainError("finest delay is not commensurate with the bin width; cannot step the phase");

  PhaseProfile profile;
  if (m_step == 1) {
    // Lattice of odd half-bin positions q: tau = q * bin_dt / 2,
    // q = 2*k_min + 1, ..., 2*k_max - 1.  The link measured at bin centre k
    // joins q = 2k - 1 to q = 2k + 1 exactly.
    const long q_lo = 2 * fine.k_min + 1;
    const long q_hi = 2 * fine.k_max - 1;
    if (q_lo > -1 || q_hi < 1)
      throw DomainError("interference range does not straddle tau = 0");
    const auto n = static_cast<std::size_t>((q_hi - q_lo) / 2 + 1);
    profile.tau.resize(n);
    profile.phi.resize(n);
    profile.phi[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      profile.tau[j] = static_cast<double>(q_lo + 2 * static_cast<long>(j)) * (bin_dt / 2.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const long k = (q_lo + 2 * static_cast<long>(j) + 1) / 2;
      profile.phi[j + 1] = profile.phi[j] + fine.dphi(k);
    }
    // Anchor phi(0) = 0: tau = 0 sits midway between lattice points q = -1, +1.
    const auto j_neg = static_cast<std::size_t>((-1 - q_lo) / 2);
    const double offset = 0.5 * (profile.phi[j_neg] + profile.phi[j_neg + 1]);
    for (double& p : profile.phi) p -= offset;
  } else {
    // Coarse-only fallback: treat dphi / (2*delay) as a derivative estimate at
    // each bin centre and integrate it with the trapezoid rule.
    const auto n = static_cast<std::size_t>(fine.k_max - fine.k_min + 1);
    if (fine.k_min > 0 || fine.k_max < 0)
      throw DomainError("interference range does not straddle tau = 0");
    std::vector<double> slope(n);
    for (std::size_t j = 0; j < n; ++j)
      slope[j] = fine.dphi(fine.k_min + static_cast<long>(j)) / (2.0 * fine.delay);
    profile.tau.resize(n);
    profile.phi.resize(n);
    profile.phi[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      profile.tau[j] = static_cast<double>(fine.k_min + static_cast<long>(j)) * bin_dt;
    for (std::size_t j = 0; j + 1 < n; ++j)
      profile.phi[j + 1] = profile.phi[j] + 0.5 * (slope[j] + slope[j + 1]) * bin_dt;
    const double offset = profile.phi[static_cast<std::size_t>(-fine.k_min)];
    for (double& p : profile.phi) p -= offset;
  }

  // Gate the estimate on the measured amplitude: |psi| >= 5% of peak
  // amplitude, i.e. counts >= 0.25% of the peak histogram value.
  const double peak = *std::max_element(amplitude.counts.begin(), amplitude.counts.end());
  const double floor = amplitude_gate * amplitude_gate * peak;
  profile.mask.resize(profile.tau.size());
  std::size_t masked_in = 0;
  for (std::size_t j = 0; j < profile.tau.size(); ++j) {
    profile.mask[j] = interp_counts(amplitude, profile.tau[j]) >= floor;
    masked_in += profile.mask[j] ? 1 : 0;
  }
  if (masked_in == 0) throw DomainError("amplitude gate leaves no usable phase samples");

  // Consistency of the coarser delays with the reconstruction: reported,
  // never corrected for.
  profile.coarse_delay_max_discrepancy = std::numeric_limits<double>::quiet_NaN();
  double worst = -1.0;
  for (std::size_t s = 1; s < sets.size(); ++s) {
    const QuadratureSet& coarse = sets[s];
    for (long k = coarse.k_min; k <= coarse.k_max; ++k) {
      const double tau = static_cast<double>(k) * bin_dt;
      const double t_minus = tau - coarse.delay;
      const double t_plus = tau + coarse.delay;
      if (interp_counts(amplitude, t_minus) < floor || interp_counts(amplitude, t_plus) < floor)
        continue;
      double phi_minus = 0.0, phi_plus = 0.0;
      if (!interp_phase(profile.tau, profile.phi, t_minus, phi_minus)) continue;
      if (!interp_phase(profile.tau, profile.phi, t_plus, phi_plus)) continue;
      const double mismatch = std::abs(wrap_pi(coarse.dphi(k) - (phi_plus - phi_minus)));
      worst = std::max(worst, mismatch);
    }
  }
  if (worst >= 0.0) profile.coarse_delay_max_discrepancy = worst;
  return profile;
}

double phase_asymmetry(const PhaseProfile& profile) {
  if (profile.tau.size() < 2) throw ConfigError("phase profile too short");
  const double step =
      (profile.tau.back() - profile.tau.front()) / static_cast<double>(profile.tau.size() - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.tau.size(); ++i) {
    if (!(profile.tau[i] > 0.0) || !profile.mask[i]) continue;
    const double target = -profile.tau[i];
    const double idx = (target - profile.tau.front()) / step;
    const double nearest = std::round(idx);
    if (nearest < 0.0 || nearest >= static_cast<double>(profile.tau.size())) continue;
    const auto j = static_cast<std::size_t>(nearest);
    if (std::abs(profile.tau[j] + profile.tau[i]) > 1e-6 * step || !profile.mask[j]) continue;
    worst = std::max(worst, std::abs(profile.phi[i] - profile.phi[j]));
  }
  return worst;
}

}  // namespace biphoton
