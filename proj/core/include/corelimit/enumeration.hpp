#pragma once

#include <cstdint>
#include <vector>

#include "corelimit/partition.hpp"

namespace corelimit {

/// An (s,s+1)-core with distinct parts. With k parts, the largest part is
/// at most s-k, so the core is exactly a k-subset of {1..s-k} read in
/// decreasing order.
class DistinctCore {
 public:
  /// Throws std::invalid_argument unless parts are strictly decreasing,
  /// positive, and the largest is at most s - k.
  DistinctCore(unsigned s, std::vector<unsigned> parts);

  unsigned modulus() const noexcept { return s_; }
  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept;

  Partition to_partition() const { return Partition(parts_); }

  friend bool operator==(const DistinctCore&, const DistinctCore&) = default;

 private:
  unsigned s_;
  std::vector<unsigned> parts_;
};

/// 0/1 vector of length s-k recording a 1 at each part value.
struct IndicatorVector {
  unsigned s = 0;
  unsigned k = 0;
  std::vector<std::uint8_t> bits;

  friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;
};

IndicatorVector to_indicator(const DistinctCore& core);

/// Inverse of to_indicator. Throws std::invalid_argument on a malformed
/// vector (wrong length or wrong number of ones).
DistinctCore from_indicator(const IndicatorVector& v);

/// All C(s-k, k) cores with exactly k distinct parts, ordered
/// lexicographically as sorted subsets of {1..s-k}. Empty when k > s/2.
std::vector<DistinctCore> enumerate_fixed_k(unsigned s, unsigned k);

/// All Fib_{s+1} cores, concatenated over k = 0..floor(s/2).
std::vector<DistinctCore> enumerate_all(unsigned s);

/// Brute-force oracle: every partition p with size(p) <= size_cap that is an
/// (s,t)-core, found by exhaustive hook inspection. The caller must pick
/// size_cap at least the maximal core size for a complete census;
/// (s^2-1)(t^2-1)/8 is safely generous. Throws std::invalid_argument when
/// gcd(s,t) != 1 (there are infinitely many cores).
std::vector<Partition> brute_force_st_cores(unsigned s, unsigned t,
                                            std::uint64_t size_cap);

}  // namespace corelimit
