#include "corelimit/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace corelimit {

DistinctCore::DistinctCore(unsigned s, std::vector<unsigned> parts)
    : s_(s), parts_(std::move(parts)) {
  const std::size_t k = parts_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (parts_[i] == 0)
      throw std::invalid_argument("core parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument("core parts must be strictly decreasing");
  }
  if (k > 0 && parts_[0] + k > s_)
    throw std::invalid_argument("largest part exceeds s - k");
}

std::uint64_t DistinctCore::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

IndicatorVector to_indicator(const DistinctCore& core) {
  const unsigned k = static_cast<unsigned>(core.part_count());
  IndicatorVector v{core.modulus(), k,
                    std::vector<std::uint8_t>(core.modulus() - k, 0)};
  for (unsigned part : core.parts()) v.bits[part - 1] = 1;
  return v;
}

DistinctCore from_indicator(const IndicatorVector& v) {
  if (v.k > v.s || v.bits.size() != v.s - v.k)
    throw std::invalid_argument("indicator vector length must be s - k");
  std::vector<unsigned> parts;
  parts.reserve(v.k);
  for (std::size_t pos = v.bits.size(); pos > 0; --pos) {
    if (v.bits[pos - 1] > 1)
      throw std::invalid_argument("indicator entries must be 0 or 1");
    if (v.bits[pos - 1]) parts.push_back(static_cast<unsigned>(pos));
  }
  if (parts.size() != v.k)
    throw std::invalid_argument("indicator vector must have exactly k ones");
  return DistinctCore(v.s, std::move(parts));
}

std::vector<DistinctCore> enumerate_fixed_k(unsigned s, unsigned k) {
  std::vector<DistinctCore> cores;
  if (2 * k > s) return cores;
  const unsigned m = s - k;

  // k-subsets of {1..m} in lexicographic order; a core's parts are the
  // subset read in decreasing order.
  std::vector<unsigned> subset(k);
  std::iota(subset.begin(), subset.end(), 1u);
  while (true) {
    std::vector<unsigned> parts(subset.rbegin(), subset.rend());
    cores.emplace_back(s, std::move(parts));
    // next lexicographic subset
    unsigned i = k;
    while (i > 0 && subset[i - 1] == m - k + i) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (unsigned j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return cores;
}

std::vector<DistinctCore> enumerate_all(unsigned s) {
  std::vector<DistinctCore> cores;
  for (unsigned k = 0; 2 * k <= s; ++k) {
    auto block = enumerate_fixed_k(s, k);
    cores.insert(cores.end(), std::make_move_iterator(block.begin()),
                 std::make_move_iterator(block.end()));
  }
  return cores;
}

namespace {

void collect_cores(std::vector<unsigned>& prefix, std::uint64_t remaining,
                   unsigned max_part, unsigned s, unsigned t,
                   std::vector<Partition>& out) {
  Partition candidate{std::vector<unsigned>(prefix)};
  if (is_st_core(candidate, s, t)) out.push_back(std::move(candidate));
  const unsigned cap =
      static_cast<unsigned>(std::min<std::uint64_t>(remaining, max_part));
  for (unsigned part = cap; part >= 1; --part) {
    prefix.push_back(part);
    collect_cores(prefix, remaining - part, part, s, t, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> brute_force_st_cores(unsigned s, unsigned t,
                                            std::uint64_t size_cap) {
  if (std::gcd(s, t) != 1)
    throw std::invalid_argument("infinitely many cores");
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  const unsigned max_part =
      static_cast<unsigned>(std::min<std::uint64_t>(size_cap, 0xffffffffu));
  collect_cores(prefix, size_cap, max_part, s, t, out);
  return out;
}

}  // namespace corelimit
