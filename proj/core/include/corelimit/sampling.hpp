#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "corelimit/distributions.hpp"
#include "corelimit/enumeration.hpp"

namespace corelimit {

/// All sampling is driven by std::mt19937_64 so that a seed pins the exact
/// output stream on every platform. No global RNG state anywhere; callers
/// inject the generator.
using Rng = std::mt19937_64;

struct SampleConfig {
  unsigned s = 0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

struct KsReport {
  double statistic = 0;
  double critical_value_1pct = 0;  // asymptotic 1.63 / sqrt(n)
  bool pass = false;
  std::size_t n = 0;
};

/// Uniform integer in [0, n), by rejection on raw 64-bit draws; unbiased and
/// platform independent. Throws std::invalid_argument when n = 0.
std::uint64_t bounded_uint(Rng& rng, std::uint64_t n);

/// Uniform k-subset of {1..m}, sorted ascending, via partial Fisher-Yates.
/// Throws std::invalid_argument when k > m.
std::vector<unsigned> uniform_k_subset(unsigned m, unsigned k, Rng& rng);

/// Draws uniformly from all Fib_{s+1} cores at modulus s. Stage one draws
/// the part count k with its exact weight by comparing one 64-bit variate
/// against cumulative thresholds floor(cum_k * 2^64) (bias below 2^-64);
/// stage two draws a uniform k-subset of {1..s-k}.
class CoreSampler {
 public:
  explicit CoreSampler(unsigned s);

  DistinctCore sample(Rng& rng) const;
  unsigned modulus() const noexcept { return s_; }

 private:
  unsigned s_;
  std::vector<BigInt> thresholds_;  // cumulative, last = 2^64
};

/// One-shot convenience wrapper around CoreSampler.
DistinctCore sample_core(unsigned s, Rng& rng);

/// Kolmogorov-Smirnov statistic of sampled sizes against the EXACT size CDF
/// of mixture_distribution(cfg.s) (not against the normal), with the
/// asymptotic 1% critical value. Deterministic given cfg.seed. Requires
/// n_samples >= 1000.
KsReport empirical_ks(const SampleConfig& cfg);

/// KS statistic of a sample against the standard normal CDF.
double ks_statistic_vs_normal(std::vector<double> values);

/// Samples the normalized subset-sum statistic T = (S - mu)/sigma where S is
/// the sum of a uniform k-subset of {1..m}; this is the rank-1 permutation
/// statistic of the combinatorial CLT. Throws std::domain_error when the
/// variance is zero (k = 0 or k = m).
std::vector<double> permutation_sum_sample(unsigned m, unsigned k,
                                           const SampleConfig& cfg);

}  // namespace corelimit
