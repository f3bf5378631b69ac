#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schroeder {

// Goodness-of-fit verdict at a fixed significance level.
struct GofResult {
  std::string test;        // "chi-square" | "kolmogorov-smirnov"
  double statistic = 0.0;
  int64_t df_or_n = 0;     // degrees of freedom (chi-square) or sample count (KS)
  double threshold = 0.0;  // critical value at the configured significance
  bool pass = false;       // statistic < threshold
};

// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

// Chi-square quantile: smallest x with P(df/2, x/2) = p.
double chi_square_quantile(double p, int df);

double normal_cdf(double x);

// c with 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 c^2) = alpha; threshold is c/sqrt(N).
double kolmogorov_critical(double alpha);

inline constexpr double kSignificance = 0.01;

// Pearson chi-square of observed counts against expected probabilities
// (cells with zero expectation must carry zero observations and are skipped;
// df = nonzero cells - 1).
GofResult chi_square_test(const std::vector<uint64_t>& observed,
                          const std::vector<double>& expected_probs,
                          double significance = kSignificance);

// KS distance of an integer-valued sample against the normal fitted by the
// given moments, with the empirical CDF compared at cell midpoints
// (continuity correction); the naive comparison at lattice points is biased
// upward by half the largest cell mass for any lattice distribution.
GofResult ks_lattice_test(const std::map<int64_t, uint64_t>& histogram, double mean,
                          double stddev, double significance = kSignificance);

}  // namespace schroeder
