#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace corelimit {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the empty partition (size 0, length 0).
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Sum of the parts.
  std::uint64_t size() const noexcept;

  /// True when the parts are strictly decreasing.
  bool distinct_parts() const noexcept;

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Hook lengths of every cell of the Ferrers diagram, French convention:
/// rows[i-1] is row i counted from the bottom, so rows[0] has λ_1 entries.
struct HookTable {
  std::vector<std::vector<unsigned>> rows;

  std::size_t cell_count() const noexcept;
};

/// hook(i,j) = (λ_i - j) + #{r > i : λ_r >= j} + 1, 1-indexed.
HookTable hook_table(const Partition& p);

/// True iff no cell has hook length s.
bool is_s_core(const Partition& p, unsigned s);

/// True iff p is simultaneously an s-core and a t-core.
bool is_st_core(const Partition& p, unsigned s, unsigned t);

/// length + largest part - 1. Throws std::domain_error on the empty
/// partition, for which the quantity is undefined.
unsigned perimeter(const Partition& p);

/// Perimeter characterization of (s,s+1)-cores among distinct-part
/// partitions: true iff p is empty or perimeter(p) <= s-1. Agrees with
/// is_st_core(p, s, s+1) whenever p has distinct parts. Throws
/// std::invalid_argument when parts are not distinct.
bool perimeter_criterion(const Partition& p, unsigned s);

}  // namespace corelimit
