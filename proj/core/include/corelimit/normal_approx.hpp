#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "corelimit/distributions.hpp"
#include "corelimit/polynomial.hpp"

namespace corelimit {

/// Standard normal CDF, absolute error below 1e-14 (complementary error
/// function route). Throws std::invalid_argument on NaN.
double phi_cdf(double x);

/// Standard normal density (1/sqrt(2*pi)) * exp(-x^2/2).
double phi_pdf(double x);

/// Kolmogorov distance of an exact distribution to the normal with the
/// distribution's own mean and variance, and its sqrt(s)-scaled value.
struct DeviationReport {
  unsigned s = 0;
  double kolmogorov = 0;
  double scaled = 0;  // kolmogorov * sqrt(s)
  double mean = 0;
  double stddev = 0;
};

/// sup_x |P(X <= mu + x*sigma) - Phi(x)| for the exact distribution d.
/// The CDF is a step function, so the supremum is attained at a support atom
/// from one side or the other; both sides are evaluated at every atom.
/// F values stay rational until the final comparison. Throws
/// std::domain_error on zero total or zero variance.
double kolmogorov_statistic(const SizeDistribution& d);

/// kolmogorov_statistic plus the scaled value and moments, tagged with s.
DeviationReport kolmogorov_distance(const SizeDistribution& d, unsigned s);

/// kolmogorov_distance(mixture_distribution(s), s) for s in [s_min, s_max].
std::vector<DeviationReport> deviation_sweep(unsigned s_min, unsigned s_max);

struct GlobalBoundResult {
  double max_residual = 0;
  double bound = 0;
  bool pass = false;
};

/// Pitman's global bound for the real-rooted weight sequence at modulus s:
/// max_k |S_k - Phi((k - mu_W)/sigma_W)| < 0.7975 / sigma_W, where S_k are
/// the partial sums of the weights. Throws std::domain_error when the weight
/// variance is zero (s = 1).
GlobalBoundResult pitman_global_check(unsigned s);

/// sigma * max_k |sigma * p_k - phi((k - mu_W)/sigma_W)|. The universal
/// constant in Pitman's local bound is unspecified, so this is reported
/// only, never asserted against a constant.
double pitman_local_residual(unsigned s);

/// Real roots of a square-free integer polynomial, ascending. Exact
/// arithmetic throughout: sign-change isolation on dyadic intervals with
/// Descartes pruning, then bisection to ~1e-12 relative width. Double
/// precision cannot do this job here: the clustered roots of g_s are too
/// ill-conditioned in the coefficient basis beyond s around 40. Throws
/// std::runtime_error when isolation fails to terminate (non-square-free
/// input).
std::vector<double> isolate_real_roots(const IntPolynomial& p);

struct RootReport {
  unsigned s = 0;
  std::vector<double> roots;  // certified real roots, ascending
  double max_imag = 0;        // 0 by certification when all_real
  double max_root = 0;        // largest root
  bool all_real = false;      // count of real roots equals the degree
  bool pass = false;          // all_real and max_root <= -1/4 + 1e-9
};

/// Locates all roots of g_s_polynomial(s) and checks that every one is real
/// and at most -1/4 (tolerance 1e-9). Requires 2 <= s <= 60; throws
/// std::invalid_argument outside that range.
RootReport real_roots_check(unsigned s);

/// Weight mass outside the window ((c0-eps)s, (c0+eps)s) around the mean
/// slope c0 = (5-sqrt(5))/10, from exact rationals. Requires 0 < eps < c0.
double tail_mass(unsigned s, double eps);

/// Integral of Phi(a*x + b*t) * phi(t) dt over t, by composite
/// Gauss-Legendre quadrature on [-12,12]; the neglected tail is below
/// 1e-30. Equals Phi(a*x / sqrt(1 + b^2)) to well within 1e-8.
double mixing_quadrature(double a, double b, double x);

/// Both sides of the summation-by-parts identity
///   sum_{k=m}^{n} U_k (V_k - V_{k-1})
///     = sum_{k=m}^{n} (U_k - U_{k+1}) V_k + [U_{n+1} V_n - U_m V_{m-1}],
/// with U indexed m..n+1 and V indexed m-1..n (equal storage lengths >= 2).
/// Throws std::invalid_argument on a length mismatch.
std::pair<double, double> summation_by_parts(std::span<const double> u,
                                             std::span<const double> v);

struct RiemannCheckResult {
  double error = 0;  // worst left-endpoint Riemann-sum error over the x grid
  double bound = 0;  // worst V_h * mesh over the x grid (linear in mesh)
  bool pass = false; // error <= V_h * mesh at every grid x
};

/// For h(t) = Phi(a*x + b*t) * phi(t) with a = sqrt(8/5), b = -sqrt(3/5) and
/// x on the grid {-3..3}: left-endpoint Riemann sums on intervals of width
/// `mesh` over [-12,12] versus high-accuracy quadrature, checked against the
/// total-variation bound V_h * mesh with V_h = integral of |h'|.
/// Requires 0 < mesh <= 1.
RiemannCheckResult riemann_total_variation_check(double mesh);

struct YkDiagnosticRow {
  unsigned k = 0;
  double t_k = 0;        // 5^{3/4} (k - k0) / sqrt(s), k0 = floor(c0*s)
  double y_k = 0;        // ((mu - mu_k) + x*sigma) / sigma_k, exact moments
  double y_k_star = 0;   // a*x + b*t_k
  double residual = 0;   // |y_k - y_k_star|
  double normalized = 0; // residual * sqrt(s) / (1 + |x*t_k| + t_k^2)
};

/// Rows for every k with 0 < k < s/2 (the endpoints have zero variance and
/// are excluded). Requires s >= 3.
std::vector<YkDiagnosticRow> y_k_diagnostic(unsigned s, double x);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

/// Least-squares line fit; r_squared is 1 for constant y.
/// Throws std::invalid_argument unless sizes match and are >= 2.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace corelimit
