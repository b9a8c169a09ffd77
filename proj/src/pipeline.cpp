#include "biphoton/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "biphoton/csv.hpp"
#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (fs::path(cfg.output_dir) / name).string();
}

std::string histogram_csv(const CoincidenceHistogram& hist, const std::string& header) {
  std::ostringstream out;
  out << header << "\n";
  for (std::size_t i = 0; i < hist.tau_bins.size(); ++i)
    out << csv_number(hist.tau_bins[i] * 1e9) << "," << csv_number(hist.counts[i]) << "\n";
  return out.str();
}

const std::vector<double>& battery_delays() {
  static const std::vector<double> delays{1.0e-9, 5.8e-9};
  return delays;
}

std::string delay_tag(double delay) {
  std::ostringstream out;
  out << delay * 1e9;  // default %g-style formatting: "1", "5.8"
  return out.str();
}

}  // namespace

SimulationProducts simulate_pair(const RunConfig& cfg) {
  cfg.validate();
  const ComplexSpectrum spectrum =
      build_spectral_amplitude(cfg.grid, cfg.medium, cfg.lasers, cfg.convention);
  SimulationProducts products;
  products.psi = temporal_wavefunction(spectrum, cfg.medium, cfg.tau_range);
  products.pair = symmetrize(products.psi);
  products.c_plus = coincidence_counts(products.pair, cfg.detection, ExchangeSign::Plus);
  products.c_minus = coincidence_counts(products.pair, cfg.detection, ExchangeSign::Minus);
  return products;
}

SimulationProducts run_simulate(const RunConfig& cfg) {
  SimulationProducts products = simulate_pair(cfg);
  if (cfg.lasers.omega_p_rabi == 0.0)
    std::cerr << "warning: omega_p_rabi = 0, the pair amplitude and all expected counts vanish\n";

  std::ostringstream psi_csv;
  psi_csv << "tau_ns,re_psi,im_psi,abs_psi,re_psi_plus,im_psi_plus,re_psi_minus,im_psi_minus\n";
  const auto& psi = products.psi;
  for (std::size_t i = 0; i < psi.tau.size(); ++i) {
    psi_csv << csv_number(psi.tau[i] * 1e9) << "," << csv_number(psi.values[i].real()) << ","
            << csv_number(psi.values[i].imag()) << "," << csv_number(std::abs(psi.values[i]))
            << "," << csv_number(products.pair.psi_plus.values[i].real()) << ","
            << csv_number(products.pair.psi_plus.values[i].imag()) << ","
            << csv_number(products.pair.psi_minus.values[i].real()) << ","
            << csv_number(products.pair.psi_minus.values[i].imag()) << "\n";
  }
  write_text_file(out_path(cfg, "psi.csv"), psi_csv.str());

  std::ostringstream counts_csv;
  counts_csv << "tau_ns,c_plus,c_minus\n";
  for (std::size_t i = 0; i < products.c_plus.tau_bins.size(); ++i)
    counts_csv << csv_number(products.c_plus.tau_bins[i] * 1e9) << ","
               << csv_number(products.c_plus.counts[i]) << ","
               << csv_number(products.c_minus.counts[i]) << "\n";
  write_text_file(out_path(cfg, "counts.csv"), counts_csv.str());
  return products;
}

FitReport run_fit(const RunConfig& cfg, const std::string& data_path, bool poisson_weighted) {
  const SimulationProducts products = simulate_pair(cfg);
  auto rows = read_counts_file(data_path);
  std::sort(rows.begin(), rows.end());

  const double dt = cfg.detection.bin_dt;
  if (rows.size() >= 2) {
    const double data_dt = rows[1].first - rows[0].first;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (std::abs((rows[i].first - rows[i - 1].first) - data_dt) > 1e-6 * dt)
        throw ConfigError("data bin centres are not uniformly spaced");
    if (std::abs(data_dt - dt) > 1e-6 * dt)
      throw ConfigError("data bin width " + csv_number(data_dt * 1e9) +
                        " ns is incompatible with configured bin width " + csv_number(dt * 1e9) +
                        " ns");
  }

  // Restrict the model histograms to the data's bins (the data may cover a
  // narrower range, but must sit on the same bin centres).
  const CoincidenceHistogram& full_plus = products.c_plus;
  const long k_lo = std::lround(full_plus.tau_bins.front() / dt);
  const long k_hi = std::lround(full_plus.tau_bins.back() / dt);
  CoincidenceHistogram model_plus{{}, {}, dt}, model_minus{{}, {}, dt}, data{{}, {}, dt};
  for (const auto& [tau, counts] : rows) {
    const double k_real = tau / dt;
    const long k = std::lround(k_real);
    if (std::abs(k_real - static_cast<double>(k)) > 1e-6)
      throw ConfigError("data bin centre " + csv_number(tau * 1e9) +
                        " ns does not align with the model bin grid");
    if (k < k_lo || k > k_hi)
      throw ConfigError("data bin centre " + csv_number(tau * 1e9) +
                        " ns lies outside the model range");
    const auto i = static_cast<std::size_t>(k - k_lo);
    model_plus.tau_bins.push_back(full_plus.tau_bins[i]);
    model_plus.counts.push_back(full_plus.counts[i]);
    model_minus.tau_bins.push_back(products.c_minus.tau_bins[i]);
    model_minus.counts.push_back(products.c_minus.counts[i]);
    data.tau_bins.push_back(full_plus.tau_bins[i]);
    data.counts.push_back(counts);
  }

  const FitReport report = compare_models(model_plus, model_minus, data, 2.0, {}, poisson_weighted);

  std::ostringstream out;
  out << "beta_plus = " << csv_number(report.beta_plus) << "\n"
      << "beta_minus = " << csv_number(report.beta_minus) << "\n"
      << "rss_plus = " << csv_number(report.rss_plus) << "\n"
      << "rss_minus = " << csv_number(report.rss_minus) << "\n"
      << "residual_ratio = " << csv_number(report.residual_ratio) << "\n"
      << "verdict = " << report.verdict << "\n"
      << "n_bins_used = " << report.n_bins_used << "\n"
      << "weighting = " << (poisson_weighted ? "poisson" : "unweighted") << "\n";
  write_text_file(out_path(cfg, "fit_report.txt"), out.str());
  return report;
}

TomographyProducts run_tomography(const RunConfig& cfg, bool zero_phase) {
  cfg.validate();
  RunConfig effective = cfg;
  if (cfg.grid == SpectralGrid{})
    effective.grid = SpectralGrid{65536, two_pi * 1e9};

  SimulationProducts products = simulate_pair(effective);
  if (zero_phase) {
    for (Complex& v : products.pair.psi_plus.values) v = std::abs(v);
  }

  TomographyProducts tomo;
  tomo.amplitude = coincidence_counts(products.pair, effective.detection, ExchangeSign::Plus);
  write_text_file(out_path(cfg, "amplitude.csv"), histogram_csv(tomo.amplitude, "tau_ns,counts"));

  tomo.measurements = measure_battery(products.pair, battery_delays(), effective.detection);
  for (const auto& measurement : tomo.measurements)
    for (std::size_t i = 0; i < measurement.settings.size(); ++i) {
      const auto& setting = measurement.settings[i];
      const std::string name =
          "setting_d" + delay_tag(setting.delay_dt) + "ns_" + setting.label + ".csv";
      write_text_file(out_path(cfg, name), histogram_csv(measurement.histograms[i], "tau_ns,counts"));
    }

  tomo.profile = reconstruct_phase(tomo.measurements, tomo.amplitude);
  tomo.max_asymmetry = phase_asymmetry(tomo.profile);

  std::ostringstream phase_csv;
  phase_csv << "tau_ns,phi_rad,mask\n";
  for (std::size_t i = 0; i < tomo.profile.tau.size(); ++i)
    phase_csv << csv_number(tomo.profile.tau[i] * 1e9) << "," << csv_number(tomo.profile.phi[i])
              << "," << (tomo.profile.mask[i] ? 1 : 0) << "\n";
  write_text_file(out_path(cfg, "phase.csv"), phase_csv.str());

  std::ostringstream report;
  report << "max_phase_asymmetry_rad = " << csv_number(tomo.max_asymmetry) << "\n"
         << "coarse_delay_max_discrepancy_rad = "
         << csv_number(tomo.profile.coarse_delay_max_discrepancy) << "\n"
         << "n_settings = " << 6 * tomo.measurements.size() << "\n"
         << "delays_ns = 1,5.8\n";
  write_text_file(out_path(cfg, "symmetry_report.txt"), report.str());
  return tomo;
}

namespace {

RunConfig apply_sweep_value(RunConfig cfg, const std::string& parameter, double value) {
  // A mismatch equal to the detuning-derived value is treated as derived and
  // follows the swept detunings; an explicit override stays fixed.
  const bool tracks_detuning =
      cfg.lasers.pump_coupling_wavenumber_diff == derived_wavenumber_diff(cfg.medium, cfg.lasers);
  if (parameter == "optical_depth")
    cfg.medium.optical_depth = value;
  else if (parameter == "omega_c_rabi")
    cfg.lasers.omega_c_rabi = value;
  else if (parameter == "delta_p")
    cfg.lasers.delta_p = value;
  else
    throw ConfigError("unknown sweep parameter '" + parameter +
                      "' (expected optical_depth, omega_c_rabi, or delta_p)");
  if (tracks_detuning)
    cfg.lasers.pump_coupling_wavenumber_diff = derived_wavenumber_diff(cfg.medium, cfg.lasers);
  cfg.validate();
  return cfg;
}

}  // namespace

void run_sweep(const RunConfig& cfg, const std::string& parameter, const std::vector<double>& values) {
  if (values.empty()) throw ConfigError("sweep needs at least one value (--values)");

  std::ostringstream summary;
  summary << "value,fwhm_c_plus_ns,peak_c_plus,n_c_minus_oscillation_minima\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const RunConfig point = apply_sweep_value(cfg, parameter, values[i]);
    const SimulationProducts products = simulate_pair(point);

    std::ostringstream counts_csv;
    counts_csv << "tau_ns,c_plus,c_minus\n";
    for (std::size_t b = 0; b < products.c_plus.tau_bins.size(); ++b)
      counts_csv << csv_number(products.c_plus.tau_bins[b] * 1e9) << ","
                 << csv_number(products.c_plus.counts[b]) << ","
                 << csv_number(products.c_minus.counts[b]) << "\n";
    write_text_file(out_path(cfg, "counts_" + std::to_string(i) + ".csv"), counts_csv.str());

    summary << csv_number(values[i]) << "," << csv_number(histogram_fwhm(products.c_plus) * 1e9)
            << "," << csv_number(*std::max_element(products.c_plus.counts.begin(),
                                                   products.c_plus.counts.end()))
            << "," << oscillation_minima_count(products.c_minus) << "\n";
  }
  write_text_file(out_path(cfg, "summary.csv"), summary.str());
}

double histogram_fwhm(const CoincidenceHistogram& hist) {
  hist.validate();
  const double half = *std::max_element(hist.counts.begin(), hist.counts.end()) / 2.0;

  // Full width of the region above half maximum: the outermost crossings, so
  // interior structure (notches, ripples) does not truncate the width.
  auto crossing = [&](bool rightward) -> double {
    const std::size_t n = hist.counts.size();
    std::size_t i = rightward ? n - 1 : 0;
    while (hist.counts[i] < half) {
      if ((rightward && i == 0) || (!rightward && i + 1 >= n))
        return hist.tau_bins[i];  // degenerate: single-bin peak
      i = rightward ? i - 1 : i + 1;
    }
    if ((rightward && i + 1 >= n) || (!rightward && i == 0))
      return hist.tau_bins[i];  // no crossing inside the range: clamp to the edge
    const std::size_t outer = rightward ? i + 1 : i - 1;
    const double f = (hist.counts[i] - half) / (hist.counts[i] - hist.counts[outer]);
    return hist.tau_bins[i] + f * (hist.tau_bins[outer] - hist.tau_bins[i]);
  };
  return crossing(true) - crossing(false);
}

std::size_t oscillation_minima_count(const CoincidenceHistogram& hist, double window_lo,
                                     double window_hi, double rel_floor) {
  hist.validate();
  const double floor = rel_floor * *std::max_element(hist.counts.begin(), hist.counts.end());
  std::size_t n = 0;
  for (std::size_t i = 1; i + 1 < hist.counts.size(); ++i) {
    const double abs_tau = std::abs(hist.tau_bins[i]);
    if (abs_tau <= window_lo || abs_tau >= window_hi) continue;
    if (hist.counts[i] < hist.counts[i - 1] && hist.counts[i] < hist.counts[i + 1] &&
        hist.counts[i] < floor)
      ++n;
  }
  return n;
}

}  // namespace biphoton
