#include "corelimit/normal_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "corelimit/numbers.hpp"

namespace corelimit {

namespace {

constexpr double kC0 = 0.27639320225002103;    // (5 - sqrt(5)) / 10
const double kMixA = std::sqrt(8.0 / 5.0);
const double kMixB = -std::sqrt(3.0 / 5.0);

// 20-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlNode[10] = {
    0.07652652113349734, 0.22778585114164507, 0.37370608871541955,
    0.51086700195082710, 0.63605368072651503, 0.74633190646015079,
    0.83911697182221882, 0.91223442825132591, 0.96397192727791379,
    0.99312859918509492};
constexpr double kGlWeight[10] = {
    0.15275338713072585, 0.14917298647260374, 0.14209610931838205,
    0.13168863844917663, 0.11819453196151842, 0.10193011981724044,
    0.08327674157670475, 0.06267204833410907, 0.04060142980038694,
    0.01761400713915212};

// Composite Gauss-Legendre quadrature with unit-length panels; for the
// smooth normal-weighted integrands here the truncation error is far below
// every tolerance in this module.
template <typename F>
double integrate(F&& f, double a, double b) {
  const int panels = std::max(1, static_cast<int>(std::ceil(b - a)));
  const double width = (b - a) / panels;
  double sum = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (int i = 0; i < 10; ++i) {
      sum += kGlWeight[i] *
             (f(mid - half * kGlNode[i]) + f(mid + half * kGlNode[i]));
    }
  }
  return sum * 0.5 * width;
}

}  // namespace

double phi_cdf(double x) {
  if (std::isnan(x)) throw std::invalid_argument("phi_cdf: NaN input");
  return 0.5 * std::erfc(-x * std::numbers::sqrt2_v<double> / 2.0);
}

double phi_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi_v<double>);
}

double kolmogorov_statistic(const SizeDistribution& d) {
  const ExactMoments m = exact_moments(d);  // throws on zero total
  if (m.variance == 0) throw std::domain_error("zero variance");
  const double sigma = std::sqrt(to_double(m.variance));

  // F is a step function, so sup_x |F(mu + x sigma) - Phi(x)| is attained at
  // an atom, approaching from one side or the other.
  double worst = 0;
  BigInt cumulative = 0;
  for (std::size_t i = 0; i < d.counts().size(); ++i) {
    const BigInt& c = d.counts()[i];
    if (c == 0) continue;
    const BigInt n = d.min_size() + i;
    const double z = to_double(Rational(n) - m.mean) / sigma;
    const double normal = phi_cdf(z);
    const double left = to_double(Rational(cumulative, d.total()));
    cumulative += c;
    const double right = to_double(Rational(cumulative, d.total()));
    worst = std::max({worst, std::abs(right - normal), std::abs(left - normal)});
  }
  return worst;
}

DeviationReport kolmogorov_distance(const SizeDistribution& d, unsigned s) {
  const ExactMoments m = exact_moments(d);
  const double statistic = kolmogorov_statistic(d);
  return {s, statistic, statistic * std::sqrt(static_cast<double>(s)),
          to_double(m.mean), std::sqrt(to_double(m.variance))};
}

std::vector<DeviationReport> deviation_sweep(unsigned s_min, unsigned s_max) {
  if (s_min > s_max || s_min == 0)
    throw std::invalid_argument("need 1 <= s_min <= s_max");
  std::vector<DeviationReport> reports;
  reports.reserve(s_max - s_min + 1);
  for (unsigned s = s_min; s <= s_max; ++s)
    reports.push_back(kolmogorov_distance(mixture_distribution(s), s));
  return reports;
}

GlobalBoundResult pitman_global_check(unsigned s) {
  const ExactMoments wm = weight_moments(s);
  if (wm.variance == 0) throw std::domain_error("zero variance");
  const double mu = to_double(wm.mean);
  const double sigma = std::sqrt(to_double(wm.variance));

  const BigInt total = fibonacci(s + 1);
  BigInt cumulative = 0;
  double max_residual = 0;
  for (unsigned k = 0; 2 * k <= s; ++k) {
    cumulative += binomial(s - k, k);
    const double partial = to_double(Rational(cumulative, total));
    const double residual = std::abs(partial - phi_cdf((k - mu) / sigma));
    max_residual = std::max(max_residual, residual);
  }
  const double bound = 0.7975 / sigma;
  return {max_residual, bound, max_residual < bound};
}

double pitman_local_residual(unsigned s) {
  const ExactMoments wm = weight_moments(s);
  if (wm.variance == 0) throw std::domain_error("zero variance");
  const double mu = to_double(wm.mean);
  const double sigma = std::sqrt(to_double(wm.variance));

  const WeightDistribution w = weight_distribution(s);
  double worst = 0;
  for (unsigned k = 0; k < w.weights.size(); ++k) {
    const double p = to_double(w.weights[k]);
    worst = std::max(worst, std::abs(sigma * p - phi_pdf((k - mu) / sigma)));
  }
  return sigma * worst;
}

RootReport real_roots_check(unsigned s) {
  if (s < 2 || s > 60)
    throw std::invalid_argument("real_roots_check requires 2 <= s <= 60");
  const IntPolynomial g = g_s_polynomial(s);
  RootReport report;
  report.s = s;
  report.roots = isolate_real_roots(g);
  report.max_imag = 0;
  report.all_real =
      static_cast<std::ptrdiff_t>(report.roots.size()) == g.degree();
  report.max_root = report.roots.empty()
                        ? std::numeric_limits<double>::quiet_NaN()
                        : report.roots.back();
  report.pass = report.all_real && report.max_root <= -0.25 + 1e-9;
  return report;
}

double tail_mass(unsigned s, double eps) {
  if (!(eps > 0) || !(eps < kC0))
    throw std::invalid_argument("need 0 < eps < (5-sqrt(5))/10");
  const WeightDistribution w = weight_distribution(s);
  const double lo = (kC0 - eps) * s;
  const double hi = (kC0 + eps) * s;
  Rational mass = 0;
  for (unsigned k = 0; k < w.weights.size(); ++k)
    if (k < lo || k > hi) mass += w.weights[k];
  return to_double(mass);
}

double mixing_quadrature(double a, double b, double x) {
  // truncating to [-12,12] discards normal mass below 1e-30
  return integrate([&](double t) { return phi_cdf(a * x + b * t) * phi_pdf(t); },
                   -12.0, 12.0);
}

std::pair<double, double> summation_by_parts(std::span<const double> u,
                                             std::span<const double> v) {
  if (u.size() != v.size() || u.size() < 2)
    throw std::invalid_argument("need equal sequence lengths >= 2");
  // u holds U_m..U_{n+1}; v holds V_{m-1}..V_n
  const std::size_t terms = u.size() - 1;
  double lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < terms; ++i) {
    lhs += u[i] * (v[i + 1] - v[i]);
    rhs += (u[i] - u[i + 1]) * v[i + 1];
  }
  rhs += u[terms] * v[terms] - u[0] * v[0];
  return {lhs, rhs};
}

RiemannCheckResult riemann_total_variation_check(double mesh) {
  if (!(mesh > 0) || mesh > 1)
    throw std::invalid_argument("need 0 < mesh <= 1");

  RiemannCheckResult result;
  result.pass = true;
  for (int xi = -3; xi <= 3; ++xi) {
    const double x = xi;
    const auto h = [&](double t) {
      return phi_cdf(kMixA * x + kMixB * t) * phi_pdf(t);
    };
    const auto h_prime_abs = [&](double t) {
      return std::abs(phi_pdf(t) * (kMixB * phi_pdf(kMixA * x + kMixB * t) -
                                    t * phi_cdf(kMixA * x + kMixB * t)));
    };
    const double integral = integrate(h, -12.0, 12.0);
    const double variation = integrate(h_prime_abs, -12.0, 12.0);

    double riemann = 0;
    const int intervals = static_cast<int>(std::ceil(24.0 / mesh));
    for (int i = 0; i < intervals; ++i) {
      const double left = -12.0 + i * mesh;
      riemann += h(left) * (std::min(left + mesh, 12.0) - left);
    }

    const double error = std::abs(riemann - integral);
    const double bound = variation * mesh;
    if (error > bound) result.pass = false;
    result.error = std::max(result.error, error);
    result.bound = std::max(result.bound, bound);
  }
  return result;
}

std::vector<YkDiagnosticRow> y_k_diagnostic(unsigned s, double x) {
  if (s < 3) throw std::invalid_argument("y_k_diagnostic requires s >= 3");
  const ExactMoments m = exact_moments(mixture_distribution(s));
  const double sigma = std::sqrt(to_double(m.variance));
  const double sqrt_s = std::sqrt(static_cast<double>(s));
  const long k0 = static_cast<long>(std::floor(kC0 * s));
  const double dt = std::pow(5.0, 0.75) / sqrt_s;

  std::vector<YkDiagnosticRow> rows;
  for (unsigned k = 1; 2 * k < s; ++k) {
    const ExactMoments mk = fixed_k_moments(s, k);
    const double sigma_k = std::sqrt(to_double(mk.variance));
    YkDiagnosticRow row;
    row.k = k;
    row.t_k = dt * (static_cast<long>(k) - k0);
    row.y_k = (to_double(m.mean - mk.mean) + x * sigma) / sigma_k;
    row.y_k_star = kMixA * x + kMixB * row.t_k;
    row.residual = std::abs(row.y_k - row.y_k_star);
    row.normalized =
        row.residual * sqrt_s / (1.0 + std::abs(x * row.t_k) + row.t_k * row.t_k);
    rows.push_back(row);
  }
  return rows;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("need matching sample lengths >= 2");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double predicted = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - predicted) * (y[i] - predicted);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace corelimit
