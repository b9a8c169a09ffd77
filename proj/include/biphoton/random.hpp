#pragma once

#include <cstdint>
#include <random>

#include "biphoton/types.hpp"

namespace biphoton {

/// Deterministic, platform-independent count sampler.  std::mt19937_64 has a
/// standard-mandated output sequence, but std::poisson_distribution and
/// std::uniform_real_distribution do not — their algorithms are
/// implementation-defined — so both are realized here explicitly to make
/// seeded histograms reproducible byte-for-byte across toolchains.
class CountSampler {
 public:
  explicit CountSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) using the top 53 bits of the engine output.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Poisson sample by the product-of-uniforms (Knuth) method.  The mean is
  /// split into chunks of at most 16 so exp(-chunk) stays well above
  /// double underflow; Poisson variables are additive, so the chunk sum is an
  /// exact sampler for the full mean.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

/// Synthetic measured histogram: counts[i] ~ Poisson(beta * model.counts[i] + background),
/// sampled bin-by-bin in ascending bin order from a fresh sampler seeded with `seed`.
CoincidenceHistogram synthesize_counts(const CoincidenceHistogram& model, double beta,
                                       double background, std::uint64_t seed);

}  // namespace biphoton
