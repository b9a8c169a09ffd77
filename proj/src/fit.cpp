#include "biphoton/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

void require_same_bins(const CoincidenceHistogram& a, const CoincidenceHistogram& b) {
  if (a.tau_bins.size() != b.tau_bins.size())
    throw ConfigError("histograms have different bin counts");
  if (std::abs(a.bin_dt - b.bin_dt) > 1e-6 * a.bin_dt)
    throw ConfigError("histograms have different bin widths");
  for (std::size_t i = 0; i < a.tau_bins.size(); ++i)
    if (std::abs(a.tau_bins[i] - b.tau_bins[i]) > 1e-6 * a.bin_dt)
      throw ConfigError("histogram bin centres do not align");
}

std::vector<char> window_mask(const CoincidenceHistogram& reference, const FitWindow& window) {
  if (!(window.tau_abs_max > 0.0)) throw ConfigError("fit window tau_abs_max must be > 0");
  if (!(window.model_floor_rel >= 0.0)) throw ConfigError("fit window model_floor_rel must be >= 0");
  const double peak = *std::max_element(reference.counts.begin(), reference.counts.end());
  const double floor = window.model_floor_rel * peak;
  const double tau_tol = window.tau_abs_max + 1e-6 * reference.bin_dt;
  std::vector<char> mask(reference.counts.size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = std::abs(reference.tau_bins[i]) <= tau_tol && reference.counts[i] > floor;
  return mask;
}

BetaFit fit_masked(const CoincidenceHistogram& model, const CoincidenceHistogram& data,
                   const std::vector<char>& mask, bool poisson_weighted) {
  require_same_bins(model, data);
  model.validate();
  data.validate();

  double cross = 0.0, norm = 0.0;
  std::size_t used = 0, positive_model = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    ++used;
    if (model.counts[i] > 0.0) ++positive_model;
    const double w = poisson_weighted ? 1.0 / std::max(data.counts[i], 1.0) : 1.0;
    cross += w * model.counts[i] * data.counts[i];
    norm += w * model.counts[i] * model.counts[i];
  }
  if (positive_model < 2)
    throw ConfigError("fit window keeps fewer than 2 bins with positive model counts");

  BetaFit fit;
  const double raw = cross / norm;
  fit.clamped = raw < 0.0;
  fit.beta = fit.clamped ? 0.0 : raw;
  fit.n_bins_used = used;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    const double w = poisson_weighted ? 1.0 / std::max(data.counts[i], 1.0) : 1.0;
    const double r = data.counts[i] - fit.beta * model.counts[i];
    fit.rss += w * r * r;
  }
  return fit;
}

}  // namespace

BetaFit fit_beta(const CoincidenceHistogram& model, const CoincidenceHistogram& data,
                 const FitWindow& window, bool poisson_weighted) {
  return fit_masked(model, data, window_mask(model, window), poisson_weighted);
}

FitReport compare_models(const CoincidenceHistogram& c_plus, const CoincidenceHistogram& c_minus,
                         const CoincidenceHistogram& data, double threshold,
                         const FitWindow& window, bool poisson_weighted) {
  if (!(threshold > 0.0)) throw ConfigError("verdict threshold must be > 0");
  require_same_bins(c_plus, c_minus);
  // Both hypotheses are scored over the same bin set so their residual sums
  // are comparable; the window is anchored to the bosonic model, whose
  // support covers the fermionic one's.
  const std::vector<char> mask = window_mask(c_plus, window);
  const BetaFit plus = fit_masked(c_plus, data, mask, poisson_weighted);
  const BetaFit minus = fit_masked(c_minus, data, mask, poisson_weighted);

  FitReport report;
  report.beta_plus = plus.beta;
  report.beta_minus = minus.beta;
  report.rss_plus = plus.rss;
  report.rss_minus = minus.rss;
  report.n_bins_used = plus.n_bins_used;
  if (plus.rss == 0.0)
    report.residual_ratio =
        minus.rss == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  else
    report.residual_ratio = minus.rss / plus.rss;
  if (report.residual_ratio > threshold)
    report.verdict = "bosonic";
  else if (report.residual_ratio < 1.0 / threshold)
    report.verdict = "fermionic";
  else
    report.verdict = "inconclusive";
  return report;
}

}  // namespace biphoton
