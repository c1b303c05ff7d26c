#include "corelimit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace corelimit {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::uint64_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

bool Partition::distinct_parts() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<unsigned> conj(parts_[0]);
  for (unsigned j = 1; j <= parts_[0]; ++j) {
    conj[j - 1] = static_cast<unsigned>(
        std::count_if(parts_.begin(), parts_.end(),
                      [j](unsigned part) { return part >= j; }));
  }
  return Partition(std::move(conj));
}

std::size_t HookTable::cell_count() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

HookTable hook_table(const Partition& p) {
  const auto& parts = p.parts();
  const std::size_t k = parts.size();
  HookTable table;
  if (k == 0) return table;

  // leg(i,j) = #{r > i : parts[r] >= j} = column_height(j) - i
  std::vector<unsigned> column_height(parts[0]);
  for (unsigned j = 1; j <= parts[0]; ++j) {
    column_height[j - 1] = static_cast<unsigned>(
        std::count_if(parts.begin(), parts.end(),
                      [j](unsigned part) { return part >= j; }));
  }

  table.rows.resize(k);
  for (std::size_t i = 1; i <= k; ++i) {
    auto& row = table.rows[i - 1];
    row.resize(parts[i - 1]);
    for (unsigned j = 1; j <= parts[i - 1]; ++j) {
      const unsigned arm = parts[i - 1] - j;
      const unsigned leg = column_height[j - 1] - static_cast<unsigned>(i);
      row[j - 1] = arm + leg + 1;
    }
  }
  return table;
}

bool is_s_core(const Partition& p, unsigned s) {
  const HookTable table = hook_table(p);
  for (const auto& row : table.rows)
    for (unsigned hook : row)
      if (hook == s) return false;
  return true;
}

bool is_st_core(const Partition& p, unsigned s, unsigned t) {
  return is_s_core(p, s) && is_s_core(p, t);
}

unsigned perimeter(const Partition& p) {
  if (p.empty())
    throw std::domain_error("perimeter undefined for empty partition");
  return static_cast<unsigned>(p.length()) + p.parts()[0] - 1;
}

bool perimeter_criterion(const Partition& p, unsigned s) {
  if (!p.distinct_parts())
    throw std::invalid_argument("requires distinct parts");
  if (p.empty()) return true;
  return perimeter(p) + 1 <= s;
}

}  // namespace corelimit
