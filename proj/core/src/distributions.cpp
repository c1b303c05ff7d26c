#include "corelimit/distributions.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <utility>

namespace corelimit {

namespace {
const BigInt kZero = 0;
}

SizeDistribution SizeDistribution::from_counts(std::uint64_t min_size,
                                               std::vector<BigInt> counts) {
  for (const auto& c : counts)
    if (c < 0) throw std::invalid_argument("counts must be non-negative");
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  std::size_t lead = 0;
  while (lead < counts.size() && counts[lead] == 0) ++lead;
  if (lead > 0) counts.erase(counts.begin(), counts.begin() + lead);

  SizeDistribution d;
  d.min_size_ = counts.empty() ? 0 : min_size + lead;
  d.counts_ = std::move(counts);
  for (const auto& c : d.counts_) d.total_ += c;
  return d;
}

std::uint64_t SizeDistribution::max_size() const noexcept {
  return counts_.empty() ? 0 : min_size_ + counts_.size() - 1;
}

const BigInt& SizeDistribution::count(std::uint64_t n) const noexcept {
  if (n < min_size_ || n >= min_size_ + counts_.size()) return kZero;
  return counts_[n - min_size_];
}

void SizeDistribution::add(const SizeDistribution& other) {
  if (other.counts_.empty()) return;
  if (counts_.empty()) {
    *this = other;
    return;
  }
  const std::uint64_t lo = std::min(min_size_, other.min_size_);
  const std::uint64_t hi = std::max(max_size(), other.max_size());
  std::vector<BigInt> merged(hi - lo + 1);
  for (std::size_t i = 0; i < counts_.size(); ++i)
    merged[min_size_ - lo + i] = std::move(counts_[i]);
  for (std::size_t i = 0; i < other.counts_.size(); ++i)
    merged[other.min_size_ - lo + i] += other.counts_[i];
  min_size_ = lo;
  counts_ = std::move(merged);
  total_ += other.total_;
}

namespace {

// Multiply the ascending coefficient vector by (1 - q^a) in place.
void multiply_one_minus_power(std::vector<BigInt>& c, unsigned a) {
  const std::size_t old = c.size();
  c.resize(old + a);
  for (std::size_t i = old; i-- > 0;) c[i + a] -= c[i];
}

// Exact division by (1 - q^b): ascending recurrence out[i] = c[i] + out[i-b].
// The top b coefficients of the intermediate must cancel to zero.
void divide_one_minus_power(std::vector<BigInt>& c, unsigned b) {
  const std::size_t out_len = c.size() - b;
  for (std::size_t i = b; i < out_len; ++i) c[i] += c[i - b];
  for (std::size_t i = out_len; i < c.size(); ++i) {
    if (c[i] + (i >= b ? c[i - b] : kZero) != 0)
      throw std::logic_error("inexact division in q-binomial recurrence");
  }
  c.resize(out_len);
}

}  // namespace

IntPolynomial gaussian_binomial(unsigned n, unsigned m) {
  if (m > n) return {};
  if (m > n - m) m = n - m;  // (n,m)_q == (n,n-m)_q, smaller column
  // (n, j)_q = (n, j-1)_q * (1 - q^{n-j+1}) / (1 - q^j); every intermediate
  // quotient is again a q-binomial, so the division stays exact.
  std::vector<BigInt> c{BigInt(1)};
  for (unsigned j = 1; j <= m; ++j) {
    multiply_one_minus_power(c, n - j + 1);
    divide_one_minus_power(c, j);
  }
  return IntPolynomial(std::move(c));
}

SizeDistribution fixed_k_distribution(unsigned s, unsigned k) {
  if (2 * k > s)
    throw std::invalid_argument("k exceeds floor(s/2)");
  const IntPolynomial g = gaussian_binomial(s - k, k);
  // smallest core with k distinct parts is (k, k-1, ..., 1)
  const std::uint64_t offset = std::uint64_t{k} * (k + 1) / 2;
  return SizeDistribution::from_counts(offset, g.coefficients());
}

SizeDistribution mixture_distribution(unsigned s) {
  SizeDistribution mix = fixed_k_distribution(s, 0);
  for (unsigned k = 1; 2 * k <= s; ++k) mix.add(fixed_k_distribution(s, k));
  return mix;
}

ExactMoments exact_moments(const SizeDistribution& d) {
  if (d.total() == 0)
    throw std::domain_error("moments undefined for an empty distribution");
  BigInt first = 0, second = 0;
  for (std::size_t i = 0; i < d.counts().size(); ++i) {
    const BigInt n = d.min_size() + i;
    const BigInt weighted = n * d.counts()[i];
    first += weighted;
    second += n * weighted;
  }
  const Rational mean(first, d.total());
  const Rational variance = Rational(second, d.total()) - mean * mean;
  return {mean, variance};
}

ExactMoments fixed_k_moments(unsigned s, unsigned k) {
  if (2 * k > s)
    throw std::invalid_argument("k exceeds floor(s/2)");
  const BigInt kk = k, span = s + 1 - k, width = s - 2 * k;
  return {Rational(kk * span, 2), Rational(kk * span * width, 12)};
}

WeightDistribution weight_distribution(unsigned s) {
  const BigInt total = fibonacci(s + 1);
  WeightDistribution w{s, {}};
  w.weights.reserve(s / 2 + 1);
  for (unsigned k = 0; 2 * k <= s; ++k)
    w.weights.emplace_back(binomial(s - k, k), total);
  return w;
}

ExactMoments weight_moments(unsigned s) {
  const WeightDistribution w = weight_distribution(s);
  Rational mean = 0, second = 0;
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    mean += BigInt(k) * w.weights[k];
    second += BigInt(k) * BigInt(k) * w.weights[k];
  }
  return {mean, second - mean * mean};
}

IntPolynomial g_s_polynomial(unsigned s) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(s / 2 + 1);
  for (unsigned k = 0; 2 * k <= s; ++k) coeffs.push_back(binomial(s - k, k));
  return IntPolynomial(std::move(coeffs));
}

std::string to_json(const SizeDistribution& d, unsigned s) {
  nlohmann::ordered_json j;
  j["schema"] = "core-limit/v1";
  j["s"] = s;
  j["total"] = decimal_string(d.total());
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < d.counts().size(); ++i) {
    if (d.counts()[i] == 0) continue;
    counts[std::to_string(d.min_size() + i)] = decimal_string(d.counts()[i]);
  }
  j["counts"] = std::move(counts);
  return j.dump(2);
}

}  // namespace corelimit
