// Acceptance suite: every release-gating property of the library, one
// pass/fail line per criterion. Exit code 0 only if all criteria hold
// within their time budgets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corelimit/cclt.hpp"
#include "corelimit/distributions.hpp"
#include "corelimit/enumeration.hpp"
#include "corelimit/normal_approx.hpp"
#include "corelimit/sampling.hpp"

using namespace corelimit;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool census_figure(std::string& detail) {
  const auto cores = brute_force_st_cores(3, 5, 24);
  std::multiset<std::uint64_t> sizes;
  for (const auto& p : cores) sizes.insert(p.size());
  const std::multiset<std::uint64_t> expected{0, 1, 2, 2, 4, 4, 8};
  detail = "found " + std::to_string(cores.size()) + " cores";
  return cores.size() == 7 && sizes == expected;
}

bool counting_identities(std::string& detail) {
  for (unsigned s = 1; s <= 20; ++s) {
    if (BigInt(enumerate_all(s).size()) != fibonacci(s + 1)) {
      detail = "total count mismatch at s=" + std::to_string(s);
      return false;
    }
    for (unsigned k = 0; 2 * k <= s; ++k) {
      if (BigInt(enumerate_fixed_k(s, k).size()) != binomial(s - k, k)) {
        detail = "fixed-k count mismatch at s=" + std::to_string(s) +
                 " k=" + std::to_string(k);
        return false;
      }
    }
  }
  detail = "all counts match for s <= 20";
  return true;
}

bool mixture_equals_enumeration(std::string& detail) {
  for (unsigned s = 1; s <= 16; ++s) {
    std::map<std::uint64_t, BigInt> histogram;
    for (const DistinctCore& core : enumerate_all(s)) histogram[core.size()] += 1;
    const SizeDistribution mix = mixture_distribution(s);
    BigInt seen = 0;
    for (const auto& [size, count] : histogram) {
      if (mix.count(size) != count) {
        detail = "count mismatch at s=" + std::to_string(s) +
                 " size=" + std::to_string(size);
        return false;
      }
      seen += count;
    }
    if (seen != mix.total()) {
      detail = "total mismatch at s=" + std::to_string(s);
      return false;
    }
  }
  detail = "exact equality for s <= 16";
  return true;
}

bool moment_formulas(std::string& detail) {
  for (unsigned s = 1; s <= 30; ++s) {
    for (unsigned k = 0; 2 * k <= s; ++k) {
      const ExactMoments closed = fixed_k_moments(s, k);
      const ExactMoments direct = exact_moments(fixed_k_distribution(s, k));
      const Rank1Stats rank1 = rank1_stats(s - k, k);
      if (closed != direct || rank1.mean != closed.mean ||
          rank1.variance != closed.variance) {
        detail = "mismatch at s=" + std::to_string(s) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  detail = "closed forms, distributions and subset-sum stats agree, s <= 30";
  return true;
}

bool growth_envelopes(std::string& detail) {
  const double var_limit = 2.0 * std::sqrt(5.0) / 375.0;
  double worst_mean = 0, worst_var = 0;
  for (unsigned s = 20; s <= 200; ++s) {
    const ExactMoments m = exact_moments(mixture_distribution(s));
    const double s2 = double(s) * s;
    const double mean_gap = std::abs(to_double(m.mean) / s2 - 0.1) * s;
    const double var_gap =
        std::abs(to_double(m.variance) / (s2 * s) - var_limit) * s;
    worst_mean = std::max(worst_mean, mean_gap);
    worst_var = std::max(worst_var, var_gap);
    if (mean_gap > 2.0 || var_gap > 2.0) {
      detail = "envelope exceeded at s=" + std::to_string(s);
      return false;
    }
  }
  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "max s|mean/s^2 - 1/10| = %.4f, max s|var/s^3 - c| = %.4f "
                "(limit 2)",
                worst_mean, worst_var);
  detail = buffer;
  return true;
}

bool scaled_deviation_bounded(std::string& detail) {
  const auto reports = deviation_sweep(10, 120);
  double early = 0, late = 0, overall = 0;
  for (const auto& r : reports) {
    overall = std::max(overall, r.scaled);
    if (r.s <= 40) early = std::max(early, r.scaled);
    if (r.s >= 90) late = std::max(late, r.scaled);
  }
  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "max scaled = %.4f (envelope 0.35), max[90..120] = %.4f <= "
                "max[10..40] = %.4f",
                overall, late, early);
  detail = buffer;
  return overall <= 0.35 && late <= early;
}

bool weight_global_bound(std::string& detail) {
  double worst_margin = 1e9;
  for (unsigned s = 2; s <= 400; ++s) {
    const GlobalBoundResult r = pitman_global_check(s);
    worst_margin = std::min(worst_margin, r.bound - r.max_residual);
    if (!r.pass) {
      detail = "bound violated at s=" + std::to_string(s);
      return false;
    }
  }
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "min (bound - residual) = %.4f",
                worst_margin);
  detail = buffer;
  return true;
}

bool real_rooted_weights(std::string& detail) {
  for (unsigned s = 2; s <= 60; ++s) {
    const RootReport r = real_roots_check(s);
    if (!r.pass || r.roots.size() != s / 2) {
      detail = "failed at s=" + std::to_string(s);
      return false;
    }
  }
  detail = "all roots real and <= -1/4 + 1e-9 for s <= 60";
  return true;
}

bool mixing_identity(std::string& detail) {
  const double a = std::sqrt(8.0 / 5.0);
  const double b = -std::sqrt(3.0 / 5.0);
  double worst = 0;
  for (double x = -3.0; x <= 3.001; x += 0.5)
    worst = std::max(worst, std::abs(mixing_quadrature(a, b, x) - phi_cdf(x)));
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "max |integral - Phi(x)| = %.2e", worst);
  detail = buffer;
  return worst <= 1e-8;
}

bool window_bound_factor(std::string& detail) {
  double worst = 0;
  for (unsigned s = 8; s <= 400; ++s) {
    for (unsigned k = (s + 3) / 4; k <= s / 3; ++k) {
      const double scaled =
          core_parts_bound_factor(s, k) * std::sqrt(double(s));
      worst = std::max(worst, scaled);
      if (scaled > 1000.0) {
        detail = "factor too large at s=" + std::to_string(s) +
                 " k=" + std::to_string(k);
        return false;
      }
    }
  }
  char buffer[96];
  std::snprintf(buffer, sizeof buffer,
                "max factor*sqrt(s) = %.1f (limit 1000)", worst);
  detail = buffer;
  return true;
}

bool sampler_checks(std::string& detail) {
  const KsReport ks = empirical_ks({30, 100000, 7});
  if (!ks.pass) {
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "KS %.5f >= %.5f", ks.statistic,
                  ks.critical_value_1pct);
    detail = buffer;
    return false;
  }
  for (unsigned s = 1; s <= 6; ++s) {
    Rng rng(1000 + s);
    const CoreSampler sampler(s);
    const auto cores = enumerate_all(s);
    std::map<std::vector<unsigned>, std::uint64_t> frequency;
    const std::size_t n = 100000;
    for (std::size_t i = 0; i < n; ++i) ++frequency[sampler.sample(rng).parts()];
    if (frequency.size() != cores.size()) {
      detail = "some core never sampled at s=" + std::to_string(s);
      return false;
    }
    const double p = 1.0 / double(cores.size());
    for (const auto& [parts, count] : frequency) {
      if (std::abs(count - p * n) > 4.0 * std::sqrt(n * p * (1.0 - p))) {
        detail = "frequency outside 4 sigma at s=" + std::to_string(s);
        return false;
      }
    }
  }
  char buffer[128];
  std::snprintf(buffer, sizeof buffer,
                "KS %.5f < %.5f; exhaustive frequencies within 4 sigma",
                ks.statistic, ks.critical_value_1pct);
  detail = buffer;
  return true;
}

bool tail_decay(std::string& detail) {
  std::vector<double> xs, ys;
  for (unsigned s = 50; s <= 300; ++s) {
    xs.push_back(double(s));
    ys.push_back(std::log(tail_mass(s, 0.026)));
  }
  const LinearFit fit = linear_fit(xs, ys);
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "slope = %.5f, R^2 = %.4f", fit.slope,
                fit.r_squared);
  detail = buffer;
  return fit.slope < 0.0 && fit.r_squared >= 0.9;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"(3,5)-core census by brute force", 1.0, census_figure},
      {"Fibonacci and binomial counting identities", 10.0, counting_identities},
      {"mixture equals enumeration histogram", 30.0, mixture_equals_enumeration},
      {"closed-form moments match exact distributions", 10.0, moment_formulas},
      {"mean/variance growth envelopes (20..200)", 120.0, growth_envelopes},
      {"scaled Kolmogorov deviation bounded, no upward trend", 300.0,
       scaled_deviation_bounded},
      {"weight partial sums within the global normal bound", 60.0,
       weight_global_bound},
      {"weight generating function real-rooted, roots <= -1/4", 30.0,
       real_rooted_weights},
      {"normal mixing identity via quadrature", 5.0, mixing_identity},
      {"scaled CLT bound factor below 1000 on the window", 10.0,
       window_bound_factor},
      {"sampler matches exact law (KS + exhaustive frequencies)", 60.0,
       sampler_checks},
      {"weight tail mass decays exponentially", 60.0, tail_decay},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed <= criterion.budget_seconds;
    if (!in_budget)
      detail += " [exceeded budget of " +
                std::to_string(criterion.budget_seconds) + "s]";
    const bool passed = ok && in_budget;
    failures += passed ? 0 : 1;
    std::printf("%-4s %2zu/%zu %-55s (%6.2fs) %s\n", passed ? "ok" : "FAIL",
                i + 1, criteria.size(), criterion.name.c_str(), elapsed,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
