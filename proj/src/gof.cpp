#include "schroeder/gof.hpp"

#include <cmath>
#include <stdexcept>

namespace schroeder {

namespace {

// Lower incomplete gamma by series (x < a+1) or continued fraction.
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a;
  double term = sum;
  for (int k = 1; k < 500; k++) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; i++) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::invalid_argument("regularized_gamma_p: a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_contfrac(a, x);
}

double chi_square_quantile(double p, int df) {
  if (df < 1 || p <= 0.0 || p >= 1.0) throw std::invalid_argument("chi_square_quantile");
  double a = df / 2.0;
  double lo = 0.0;
  double hi = df + 10.0 * std::sqrt(2.0 * df) + 50.0;
  while (regularized_gamma_p(a, hi / 2.0) < p) hi *= 2.0;
  for (int it = 0; it < 200; it++) {
    double mid = 0.5 * (lo + hi);
    if (regularized_gamma_p(a, mid / 2.0) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_critical(double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("kolmogorov_critical");
  auto tail = [](double c) {
    double s = 0.0;
    for (int k = 1; k <= 100; k++) {
      double term = 2.0 * std::exp(-2.0 * k * k * c * c);
      s += (k % 2 == 1) ? term : -term;
      if (term < 1e-18) break;
    }
    return s;
  };
  double lo = 0.2, hi = 3.0;
  for (int it = 0; it < 200; it++) {
    double mid = 0.5 * (lo + hi);
    if (tail(mid) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GofResult chi_square_test(const std::vector<uint64_t>& observed,
                          const std::vector<double>& expected_probs, double significance) {
  if (observed.size() != expected_probs.size())
    throw std::invalid_argument("chi_square_test: size mismatch");
  uint64_t total = 0;
  for (uint64_t c : observed) total += c;
  if (total == 0) throw std::invalid_argument("chi_square_test: empty sample");
  double stat = 0.0;
  int cells = 0;
  for (size_t i = 0; i < observed.size(); i++) {
    double e = expected_probs[i] * static_cast<double>(total);
    if (expected_probs[i] <= 0.0) {
      if (observed[i] != 0)
        throw std::invalid_argument("chi_square_test: observations in a zero-probability cell");
      continue;
    }
    cells++;
    double diff = static_cast<double>(observed[i]) - e;
    stat += diff * diff / e;
  }
  if (cells < 2) throw std::invalid_argument("chi_square_test: need at least two cells");
  GofResult r;
  r.test = "chi-square";
  r.statistic = stat;
  r.df_or_n = cells - 1;
  r.threshold = chi_square_quantile(1.0 - significance, cells - 1);
  r.pass = stat < r.threshold;
  return r;
}

GofResult ks_lattice_test(const std::map<int64_t, uint64_t>& histogram, double mean,
                          double stddev, double significance) {
  if (histogram.empty()) throw std::invalid_argument("ks_lattice_test: empty histogram");
  if (stddev <= 0.0) throw std::invalid_argument("ks_lattice_test: stddev > 0");
  uint64_t total = 0;
  for (const auto& [v, c] : histogram) total += c;
  double d = 0.0;
  double cum = 0.0;
  for (const auto& [v, c] : histogram) {
    cum += static_cast<double>(c);
    double emp = cum / static_cast<double>(total);
    double model = normal_cdf((static_cast<double>(v) + 0.5 - mean) / stddev);
    d = std::max(d, std::fabs(emp - model));
  }
  GofResult r;
  r.test = "kolmogorov-smirnov";
  r.statistic = d;
  r.df_or_n = static_cast<int64_t>(total);
  r.threshold = kolmogorov_critical(significance) / std::sqrt(static_cast<double>(total));
  r.pass = d < r.threshold;
  return r;
}

}  // namespace schroeder
