#pragma once

#include <string>

#include "biphoton/types.hpp"

namespace biphoton {

/// Bin-selection rule shared by both model fits: keep bins with
/// |tau| <= tau_abs_max whose reference-model counts exceed
/// model_floor_rel * peak(reference model).
struct FitWindow {
  double tau_abs_max = 400e-9;   ///< [s]
  double model_floor_rel = 1e-4;
};

/// Result of scaling one model histogram onto measured counts.
struct BetaFit {
  double beta = 0.0;        ///< least-squares scale, clamped at 0
  double rss = 0.0;         ///< residual sum of squares over the used bins
  std::size_t n_bins_used = 0;
  bool clamped = false;     ///< true if the unconstrained solution was negative
};

/// Side-by-side verdict of the bosonic (C_plus) and fermionic (C_minus)
/// hypotheses against one measured histogram.
struct FitReport {
  double beta_plus = 0.0;
  double beta_minus = 0.0;
  double rss_plus = 0.0;
  double rss_minus = 0.0;
  double residual_ratio = 0.0;  ///< rss_minus / rss_plus
  std::string verdict;          ///< "bosonic" | "fermionic" | "inconclusive"
  std::size_t n_bins_used = 0;
};

/// Least-squares scale of `model` onto `data` over the window derived from
/// `model` itself:  beta = sum(m*d) / sum(m^2)  (unweighted), or the
/// 1/max(d,1)-weighted analogue when poisson_weighted is set.
BetaFit fit_beta(const CoincidenceHistogram& model, const CoincidenceHistogram& data,
                 const FitWindow& window = {}, bool poisson_weighted = false);

/// Fits both symmetrizations over the window derived from the bosonic model
/// (a shared bin set, so the residuals are comparable) and classifies the
/// data by the residual ratio against `threshold`.
FitReport compare_models(const CoincidenceHistogram& c_plus, const CoincidenceHistogram& c_minus,
                         const CoincidenceHistogram& data, double threshold = 2.0,
                         const FitWindow& window = {}, bool poisson_weighted = false);

}  // namespace biphoton
