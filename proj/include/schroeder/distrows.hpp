#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schroeder/bigint.hpp"

namespace schroeder {

// Exact coefficient vector [c_0..c_m] of a counting polynomial: c_k = number
// of size-n trees whose parameter equals k. Index k is the literal parameter
// value, leading zeros included.
struct DistRow {
  int n = 0;
  std::string param;
  std::vector<BigInt> coeffs;

  BigInt total() const;
  Rational mean() const;
  // Exact variance via the second factorial moment of the row.
  Rational variance() const;

  // Lines `n,k,count`.
  void to_csv(std::ostream& os) const;
  // {"n":..., "param":..., "coeffs":["...", ...]} with decimal-string counts.
  std::string to_json() const;
};

// ---- strongly increasing model ----

// t_1 = t_2 = 1, t_n = n t_{n-1}; equals n!/2 for n >= 2.
BigInt strong_count(int n);

// Counts by number of internal nodes; t_{n,k} = t_{n-1,k} + (n-1) t_{n-1,k-1}.
DistRow strong_internal_nodes_dist(int n);
// Same row via the product form u * prod_{l=2}^{n-1} (1 + l u).
std::vector<BigInt> strong_internal_nodes_closed_form(int n);

// Coefficients of prod_{i=1}^{n-1} (u+i): unsigned Stirling cycle numbers.
DistRow stirling_cycle_row(int n);
// Checks sum_k t_{n,k} u^{n-k} == u * prod_{i=2}^{n-1} (u+i) coefficientwise.
bool check_cycle_identity(int n);

// Exact mean n - H_n + 1/2 (n >= 2).
Rational strong_internal_mean(int n);
// Exact variance computed from the distribution row (n >= 2).
Rational strong_internal_variance(int n);
// Asymptotic comparison helpers.
double strong_internal_mean_asymptotic(int n);      // n - ln n - gamma + 1/2
double strong_internal_variance_asymptotic(int n);  // ln n + gamma - pi^2/6 - 1/4

// Counts by root arity; t_n(u) = u^{n-1}(u-1) + n t_{n-1}(u).
DistRow strong_root_arity_dist(int n);
// P(root arity = k): 2k/(k+1)! for 2 <= k <= n-1, 2/n! at k = n (n > 2).
Rational strong_root_arity_probability(int n, int k);

// Counts by number of leaves attached to the root (signed-intermediate
// polynomial recurrence with derivatives).
DistRow strong_root_leaves_dist(int n);

// Counts by number of binary internal nodes.
DistRow strong_binary_nodes_dist(int n);
// Exact mean 7/3 + n - 2 H_n - 1/n (n >= 3).
Rational strong_binary_mean_closed_form(int n);
double strong_binary_mean_asymptotic(int n);      // n - 2 ln n + 7/3 - 2 gamma
double strong_binary_variance_asymptotic(int n);  // 4 ln n

// ---- weakly increasing model ----

// g_1 = 1, g_n = sum binom(n-1,k-1) g_k; g_{n+1} is the n-th ordered Bell.
BigInt weak_count(int n);

// Counts by number of building steps; g_{n,k} = sum_j binom(n-1,j-1) g_{j,k-1}.
DistRow weak_steps_dist(int n);

// Exact coefficients a_{n,k} (size n, k internal nodes) for all n <= max_n,
// solved degree by degree from the substitution equation: a size-n tree is a
// smaller tree with every leaf kept or expanded into a marked node, at least
// one expansion.
struct BivariateTruncation {
  int max_n = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[n] has entries k = 0..n-1

  const std::vector<BigInt>& row(int n) const { return rows[static_cast<size_t>(n)]; }
  DistRow dist_row(int n) const;
};

BivariateTruncation weak_internal_nodes_dist(int max_n);

// Natural log of the leading-term approximation (n-1)!/(2 ln(2)^n), n >= 2.
double weak_count_asymptotic_log(int n);
// approximation / exact, evaluated in log space.
double weak_count_asymptotic_ratio(int n);

}  // namespace schroeder
