#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corelimit/numbers.hpp"
#include "corelimit/polynomial.hpp"

namespace corelimit {

/// Exact size distribution: integer counts stored densely over
/// [min_size, min_size + counts.size()). Counts never leave exact
/// arithmetic; probabilities appear only at consumer boundaries.
class SizeDistribution {
 public:
  SizeDistribution() = default;

  /// Trims zero ends, caches the total. Throws std::invalid_argument on a
  /// negative count.
  static SizeDistribution from_counts(std::uint64_t min_size,
                                      std::vector<BigInt> counts);

  std::uint64_t min_size() const noexcept { return min_size_; }
  std::uint64_t max_size() const noexcept;
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& total() const noexcept { return total_; }

  /// Count at size n; zero outside the stored window.
  const BigInt& count(std::uint64_t n) const noexcept;

  void add(const SizeDistribution& other);

  friend bool operator==(const SizeDistribution&, const SizeDistribution&) = default;

 private:
  std::uint64_t min_size_ = 0;
  std::vector<BigInt> counts_;
  BigInt total_ = 0;
};

struct ExactMoments {
  Rational mean;
  Rational variance;

  friend bool operator==(const ExactMoments&, const ExactMoments&) = default;
};

/// Law of the part count W of a uniform random core at modulus s:
/// weights[k] = C(s-k, k) / Fib_{s+1}.
struct WeightDistribution {
  unsigned s = 0;
  std::vector<Rational> weights;
};

/// Gaussian binomial coefficient (n choose m)_q as a polynomial in q.
/// Zero polynomial when m > n. Coefficients are symmetric and unimodal,
/// degree m(n-m), value C(n,m) at q = 1.
IntPolynomial gaussian_binomial(unsigned n, unsigned m);

/// Size distribution of cores with exactly k distinct parts at modulus s:
/// gaussian_binomial(s-k, k) shifted by k(k+1)/2. Total count C(s-k, k).
/// Throws std::invalid_argument when 2k > s.
SizeDistribution fixed_k_distribution(unsigned s, unsigned k);

/// Size distribution over all cores at modulus s: the pointwise sum of
/// fixed_k_distribution over k. Total count Fib_{s+1}.
SizeDistribution mixture_distribution(unsigned s);

/// Exact mean and variance. Throws std::domain_error when total is zero.
ExactMoments exact_moments(const SizeDistribution& d);

/// Closed forms mean = k(s+1-k)/2 and variance = k(s+1-k)(s-2k)/12; equal to
/// exact_moments(fixed_k_distribution(s, k)). Throws std::invalid_argument
/// when 2k > s.
ExactMoments fixed_k_moments(unsigned s, unsigned k);

WeightDistribution weight_distribution(unsigned s);

/// Exact moments of the part count W under weight_distribution(s).
ExactMoments weight_moments(unsigned s);

/// g_s(z) = sum_k C(s-k, k) z^k, the generating function of the weight
/// numerators; g_s(1) = Fib_{s+1}.
IntPolynomial g_s_polynomial(unsigned s);

/// JSON rendering with exact decimal-string counts:
/// {"schema":"core-limit/v1","s":s,"total":"...","counts":{"size":"count",...}}
/// Counts are strings because they exceed 64-bit range for s around 90.
std::string to_json(const SizeDistribution& d, unsigned s);

}  // namespace corelimit
