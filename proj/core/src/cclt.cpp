#include "corelimit/cclt.hpp"

#include <cmath>
#include <stdexcept>

namespace corelimit {

Rank1Stats rank1_stats(unsigned m, unsigned k) {
  if (k > m) throw std::invalid_argument("k must be in [0, m]");
  const BigInt mm = m, kk = k;
  Rank1Stats stats;
  stats.m = m;
  stats.k = k;
  stats.mean = Rational(kk * (mm + 1), 2);
  stats.variance = Rational(kk * (mm - kk) * (mm + 1), 12);
  if (k > 0 && k < m) stats.bound_factor = cclt_bound_factor(m, k);
  return stats;
}

double cclt_bound_factor(unsigned m, unsigned k) {
  if (k == 0 || k >= m) throw std::domain_error("zero variance");
  const double md = m, kd = k;
  return std::pow(12.0 * md * md / (kd * (md - kd)), 1.5) / std::sqrt(md);
}

double core_parts_bound_factor(unsigned s, unsigned k) {
  if (k == 0 || 2 * k >= s) throw std::domain_error("zero variance");
  // identical to the (m, k) bound under m = s - k
  return cclt_bound_factor(s - k, k);
}

}  // namespace corelimit
