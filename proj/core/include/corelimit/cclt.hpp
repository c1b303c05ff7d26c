#pragma once

#include <optional>

#include "corelimit/numbers.hpp"

namespace corelimit {

/// Statistics of the subset-sum statistic S = sum of a uniform random
/// k-subset of {1..m}, the rank-1 case of the combinatorial CLT: mean
/// k(m+1)/2, variance k(m-k)(m+1)/12. bound_factor carries the explicit
/// CLT bound with the absolute constant factored out, and is empty when
/// the variance vanishes (k = 0 or k = m).
struct Rank1Stats {
  unsigned m = 0;
  unsigned k = 0;
  Rational mean;
  Rational variance;
  std::optional<double> bound_factor;
};

/// Throws std::invalid_argument when k > m.
Rank1Stats rank1_stats(unsigned m, unsigned k);

/// (12 m^2 / (k(m-k)))^{3/2} / sqrt(m): the combinatorial-CLT tail bound for
/// the subset-sum statistic with the absolute constant factored out.
/// All bounds in this module hold up to that unknown universal constant.
/// Throws std::domain_error ("zero variance") when k = 0 or k = m.
double cclt_bound_factor(unsigned m, unsigned k);

/// The same bound re-parameterized for cores with k distinct parts at
/// modulus s, i.e. cclt_bound_factor(s-k, k) =
/// 12^{3/2} (s-k)^{5/2} / (k(s-2k))^{3/2}. For s/4 <= k <= s/3 the product
/// factor * sqrt(s) stays below 1000. Throws std::domain_error unless
/// 0 < k < s/2.
double core_parts_bound_factor(unsigned s, unsigned k);

}  // namespace corelimit
