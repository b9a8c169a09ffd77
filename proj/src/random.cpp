#include "biphoton/random.hpp"

#include <cmath>

#include "biphoton/errors.hpp"

namespace biphoton {

std::uint64_t CountSampler::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw DomainError("Poisson mean must be finite and >= 0");
  std::uint64_t total = 0;
  double remaining = mean;
  while (remaining > 0.0) {
    const double chunk = remaining > 16.0 ? 16.0 : remaining;
    remaining -= chunk;
    const double floor_product = std::exp(-chunk);
    double product = 1.0;
    while (true) {
      product *= uniform();
      if (product <= floor_product) break;
      ++total;
    }
  }
  return total;
}

CoincidenceHistogram synthesize_counts(const CoincidenceHistogram& model, double beta,
                                       double background, std::uint64_t seed) {
  model.validate();
  if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
  if (!(background >= 0.0)) throw ConfigError("background must be >= 0");
  CountSampler sampler(seed);
  CoincidenceHistogram data = model;
  for (std::size_t i = 0; i < model.counts.size(); ++i)
    data.counts[i] = static_cast<double>(sampler.poisson(beta * model.counts[i] + background));
  return data;
}

}  // namespace biphoton
