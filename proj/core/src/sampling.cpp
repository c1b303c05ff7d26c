#include "corelimit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "corelimit/cclt.hpp"
#include "corelimit/normal_approx.hpp"

namespace corelimit {

std::uint64_t bounded_uint(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded_uint: empty range");
  // rejection keeps the draw exactly uniform and platform independent
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

std::vector<unsigned> uniform_k_subset(unsigned m, unsigned k, Rng& rng) {
  if (k > m) throw std::invalid_argument("subset size exceeds ground set");
  std::vector<unsigned> pool(m);
  std::iota(pool.begin(), pool.end(), 1u);
  for (unsigned i = 0; i < k; ++i) {
    const auto j = i + bounded_uint(rng, m - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

CoreSampler::CoreSampler(unsigned s) : s_(s) {
  const BigInt total = fibonacci(s + 1);
  BigInt cumulative = 0;
  for (unsigned k = 0; 2 * k <= s; ++k) {
    cumulative += binomial(s - k, k);
    // floor(cum_k * 2^64): probability error per class below 2^-64
    thresholds_.push_back((cumulative << 64) / total);
  }
}

DistinctCore CoreSampler::sample(Rng& rng) const {
  const BigInt draw = rng();
  unsigned k = 0;
  while (draw >= thresholds_[k]) ++k;  // last threshold is exactly 2^64
  auto subset = uniform_k_subset(s_ - k, k, rng);
  std::reverse(subset.begin(), subset.end());
  return DistinctCore(s_, std::move(subset));
}

DistinctCore sample_core(unsigned s, Rng& rng) {
  return CoreSampler(s).sample(rng);
}

KsReport empirical_ks(const SampleConfig& cfg) {
  if (cfg.n_samples < 1000)
    throw std::invalid_argument("empirical_ks needs at least 1000 samples");

  const SizeDistribution exact = mixture_distribution(cfg.s);
  const CoreSampler sampler(cfg.s);
  Rng rng(cfg.seed);

  std::vector<std::uint64_t> histogram(exact.max_size() + 1, 0);
  for (std::size_t i = 0; i < cfg.n_samples; ++i)
    ++histogram[sampler.sample(rng).size()];

  // both CDFs step only on the exact support, so compare there (both sides)
  const double n = static_cast<double>(cfg.n_samples);
  double statistic = 0;
  BigInt exact_cum = 0;
  std::uint64_t empirical_cum = 0;
  for (std::size_t i = 0; i < exact.counts().size(); ++i) {
    const std::uint64_t size = exact.min_size() + i;
    const double left_gap =
        std::abs(empirical_cum / n - to_double(Rational(exact_cum, exact.total())));
    exact_cum += exact.counts()[i];
    empirical_cum += histogram[size];
    const double right_gap =
        std::abs(empirical_cum / n - to_double(Rational(exact_cum, exact.total())));
    statistic = std::max({statistic, left_gap, right_gap});
  }

  KsReport report;
  report.statistic = statistic;
  report.critical_value_1pct = 1.63 / std::sqrt(n);
  report.pass = statistic < report.critical_value_1pct;
  report.n = cfg.n_samples;
  return report;
}

double ks_statistic_vs_normal(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double statistic = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double cdf = phi_cdf(values[i]);
    statistic = std::max({statistic, (i + 1) / n - cdf, cdf - i / n});
  }
  return statistic;
}

std::vector<double> permutation_sum_sample(unsigned m, unsigned k,
                                           const SampleConfig& cfg) {
  const Rank1Stats stats = rank1_stats(m, k);
  if (stats.variance == 0) throw std::domain_error("zero variance");
  const double mean = to_double(stats.mean);
  const double sigma = std::sqrt(to_double(stats.variance));

  Rng rng(cfg.seed);
  std::vector<double> normalized;
  normalized.reserve(cfg.n_samples);
  for (std::size_t i = 0; i < cfg.n_samples; ++i) {
    const auto subset = uniform_k_subset(m, k, rng);
    const auto sum = std::accumulate(subset.begin(), subset.end(), std::uint64_t{0});
    normalized.push_back((sum - mean) / sigma);
  }
  return normalized;
}

}  // namespace corelimit
