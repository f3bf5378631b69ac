#include "schroeder/distrows.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "schroeder/constants.hpp"
#include "schroeder/tables.hpp"

#include <json.hpp>

namespace schroeder {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

// Polynomial helpers over BigInt coefficient vectors (index = degree).
using Poly = std::vector<BigInt>;

Poly derivative(const Poly& p) {
  Poly d(p.size() > 1 ? p.size() - 1 : 0);
  for (size_t i = 1; i < p.size(); i++) {
    d[i - 1] = p[i];
    d[i - 1] *= static_cast<unsigned long>(i);
  }
  return d;
}

void add_scaled_shifted(Poly& acc, const Poly& p, const BigInt& c, size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (size_t i = 0; i < p.size(); i++) acc[i + shift].addmul(c, p[i]);
}

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

BigInt DistRow::total() const {
  BigInt s;
  for (const auto& c : coeffs) s += c;
  return s;
}

Rational DistRow::mean() const {
  BigInt num;
  for (size_t k = 0; k < coeffs.size(); k++) num.addmul(BigInt((long)k), coeffs[k]);
  return Rational(num, total());
}

Rational DistRow::variance() const {
  // E[X(X-1)] + E[X] - E[X]^2, all exact.
  BigInt m1, m2;
  for (size_t k = 0; k < coeffs.size(); k++) {
    m1.addmul(BigInt((long)k), coeffs[k]);
    m2.addmul(BigInt((long)(k)) * BigInt((long)(k ? k - 1 : 0)), coeffs[k]);
  }
  Rational t(total());
  Rational e1 = Rational(m1) / t;
  Rational e2 = Rational(m2) / t;
  return e2 + e1 - e1 * e1;
}

void DistRow::to_csv(std::ostream& os) const {
  for (size_t k = 0; k < coeffs.size(); k++)
    os << n << ',' << k << ',' << coeffs[k].to_string() << '\n';
}

std::string DistRow::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["param"] = param;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) arr.push_back(c.to_string());
  j["coeffs"] = std::move(arr);
  return j.dump();
}

// ---- strong model ----

BigInt strong_count(int n) {
  require(n >= 1, "strong_count: n >= 1");
  BigInt t(1ul);
  for (int i = 3; i <= n; i++) t *= static_cast<unsigned long>(i);
  return t;
}

DistRow strong_internal_nodes_dist(int n) {
  require(n >= 1, "strong_internal_nodes_dist: n >= 1");
  // t_{n,k} = t_{n-1,k} + (n-1) t_{n-1,k-1}, rows seeded [1] and [0,1]
  // (the k = 0 column vanishes for every n >= 2).
  if (n == 1) return DistRow{1, "internal-nodes", {BigInt(1ul)}};
  Poly row{BigInt(0ul), BigInt(1ul)};
  for (int m = 3; m <= n; m++) {
    Poly next(m);
    for (size_t k = 0; k < row.size(); k++) {
      next[k] += row[k];
      if (!row[k].is_zero()) next[k + 1].addmul(BigInt((long)(m - 1)), row[k]);
    }
    row = std::move(next);
  }
  return DistRow{n, "internal-nodes", std::move(row)};
}

std::vector<BigInt> strong_internal_nodes_closed_form(int n) {
  require(n >= 2, "closed form needs n >= 2");
  // u * prod_{l=2}^{n-1} (1 + l u)
  Poly p{BigInt(0ul), BigInt(1ul)};
  for (int l = 2; l <= n - 1; l++) {
    Poly next(p.size() + 1);
    for (size_t i = 0; i < p.size(); i++) {
      next[i] += p[i];
      next[i + 1].addmul(BigInt((long)l), p[i]);
    }
    p = std::move(next);
  }
  p.resize(n);
  return p;
}

DistRow stirling_cycle_row(int n) {
  require(n >= 1, "stirling_cycle_row: n >= 1");
  // prod_{i=1}^{n-1} (u + i)
  Poly p{BigInt(1ul)};
  for (int i = 1; i <= n - 1; i++) {
    Poly next(p.size() + 1);
    for (size_t d = 0; d < p.size(); d++) {
      next[d].addmul(BigInt((long)i), p[d]);
      next[d + 1] += p[d];
    }
    p = std::move(next);
  }
  return DistRow{n, "stirling-cycle", std::move(p)};
}

bool check_cycle_identity(int n) {
  require(n >= 2, "check_cycle_identity: n >= 2");
  DistRow internal = strong_internal_nodes_dist(n);
  // lhs: sum_k t_{n,k} u^{n-k}, i.e. reversed row over degrees 1..n
  Poly lhs(static_cast<size_t>(n) + 1);
  for (int k = 0; k < n; k++) lhs[static_cast<size_t>(n - k)] = internal.coeffs[k];
  // rhs: u * prod_{i=2}^{n-1} (u+i)
  Poly rhs{BigInt(0ul), BigInt(1ul)};
  for (int i = 2; i <= n - 1; i++) {
    Poly next(rhs.size() + 1);
    for (size_t d = 0; d < rhs.size(); d++) {
      next[d].addmul(BigInt((long)i), rhs[d]);
      next[d + 1] += rhs[d];
    }
    rhs = std::move(next);
  }
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

Rational strong_internal_mean(int n) {
  require(n >= 2, "strong_internal_mean: n >= 2");
  Rational r(BigInt((long)n));
  r -= tables::harmonic(static_cast<unsigned>(n));
  r += Rational(BigInt(1), BigInt(2));
  return r;
}

Rational strong_internal_variance(int n) {
  require(n >= 2, "strong_internal_variance: n >= 2");
  return strong_internal_nodes_dist(n).variance();
}

double strong_internal_mean_asymptotic(int n) {
  return n - std::log(static_cast<double>(n)) - constants::kEulerGamma + 0.5;
}

double strong_internal_variance_asymptotic(int n) {
  // Exact variance is H_n - H_n^(2) - 1/4 (Bernoulli decomposition of the
  // row polynomial), hence the -1/4 constant.
  return std::log(static_cast<double>(n)) + constants::kEulerGamma -
         constants::kPiSquaredOver6 - 0.25;
}

DistRow strong_root_arity_dist(int n) {
  require(n >= 1, "strong_root_arity_dist: n >= 1");
  // t_1(u) = 1, t_2(u) = u^2, t_n(u) = u^{n-1}(u-1) + n t_{n-1}(u)
  Poly p{BigInt(1ul)};
  for (int m = 2; m <= n; m++) {
    Poly next(static_cast<size_t>(m) + 1);
    for (size_t d = 0; d < p.size(); d++) next[d].addmul(BigInt((long)m), p[d]);
    next[m] += BigInt(1);
    next[m - 1] -= BigInt(1);
    if (m == 2) {  // base case: u^2, the recurrence seeds from t_1 = 1
      next.assign(3, BigInt());
      next[2] = BigInt(1);
    }
    p = std::move(next);
  }
  p.resize(static_cast<size_t>(n) + 1);
  return DistRow{n, "root-arity", std::move(p)};
}

Rational strong_root_arity_probability(int n, int k) {
  require(n >= 2, "strong_root_arity_probability: n >= 2");
  require(k >= 0 && k <= n, "strong_root_arity_probability: 0 <= k <= n");
  if (k == n) return Rational(BigInt(2), tables::factorial(static_cast<unsigned>(n)));
  if (k < 2) return Rational(BigInt(0));
  // 2k/(k+1)!
  return Rational(BigInt(2) * BigInt((long)k), tables::factorial(static_cast<unsigned>(k) + 1));
}

DistRow strong_root_leaves_dist(int n) {
  require(n >= 1, "strong_root_leaves_dist: n >= 1");
  // t_1 = 1, t_2 = u^2, t_3 = u^3 + 2u, and for n >= 4
  // t_n = (n+u) t_{n-1} + u(1-n) t_{n-2} + (1-u) t'_{n-1} + (u^2-u) t'_{n-2}
  std::vector<Poly> t(static_cast<size_t>(std::max(n, 3)) + 1);
  t[1] = Poly{BigInt(1ul)};
  t[2] = Poly{BigInt(), BigInt(), BigInt(1ul)};
  t[3] = Poly{BigInt(), BigInt(2l), BigInt(), BigInt(1ul)};
  for (int m = 4; m <= n; m++) {
    Poly acc;
    const Poly& a = t[m - 1];
    const Poly& b = t[m - 2];
    Poly da = derivative(a);
    Poly db = derivative(b);
    add_scaled_shifted(acc, a, BigInt((long)m), 0);   // n * t_{n-1}
    add_scaled_shifted(acc, a, BigInt(1), 1);         // u * t_{n-1}
    add_scaled_shifted(acc, b, BigInt(1l - m), 1);    // u(1-n) t_{n-2}
    add_scaled_shifted(acc, da, BigInt(1), 0);        // t'_{n-1}
    add_scaled_shifted(acc, da, BigInt(-1l), 1);      // -u t'_{n-1}
    add_scaled_shifted(acc, db, BigInt(1), 2);        // u^2 t'_{n-2}
    add_scaled_shifted(acc, db, BigInt(-1l), 1);      // -u t'_{n-2}
    acc.resize(static_cast<size_t>(m) + 1);
    t[m] = std::move(acc);
  }
  Poly row = t[std::min<size_t>(n, t.size() - 1)];
  row.resize(static_cast<size_t>(n) + 1);
  return DistRow{n, "root-leaves", std::move(row)};
}

DistRow strong_binary_nodes_dist(int n) {
  require(n >= 1, "strong_binary_nodes_dist: n >= 1");
  // t_1 = 1, t_2 = u, t_3 = 1 + 2u^2, and for n >= 4
  // t_n = (1 + u(n-1)) t_{n-1} + (1-u)(n-2) t_{n-2}
  std::vector<Poly> t(static_cast<size_t>(std::max(n, 3)) + 1);
  t[1] = Poly{BigInt(1ul)};
  t[2] = Poly{BigInt(), BigInt(1ul)};
  t[3] = Poly{BigInt(1ul), BigInt(), BigInt(2l)};
  for (int m = 4; m <= n; m++) {
    Poly acc;
    add_scaled_shifted(acc, t[m - 1], BigInt(1), 0);
    add_scaled_shifted(acc, t[m - 1], BigInt((long)(m - 1)), 1);
    add_scaled_shifted(acc, t[m - 2], BigInt((long)(m - 2)), 0);
    add_scaled_shifted(acc, t[m - 2], BigInt(-(long)(m - 2)), 1);
    acc.resize(static_cast<size_t>(m));
    t[m] = std::move(acc);
  }
  Poly row = t[std::min<size_t>(n, t.size() - 1)];
  row.resize(std::max<size_t>(static_cast<size_t>(n), 1));
  return DistRow{n, "binary-nodes", std::move(row)};
}

Rational strong_binary_mean_closed_form(int n) {
  require(n >= 3, "strong_binary_mean_closed_form: n >= 3");
  Rational r(BigInt(7), BigInt(3));
  r += Rational(BigInt((long)n));
  Rational h = tables::harmonic(static_cast<unsigned>(n));
  r -= h + h;
  r -= Rational(BigInt(1), BigInt((long)n));
  return r;
}

double strong_binary_mean_asymptotic(int n) {
  return n - 2.0 * std::log(static_cast<double>(n)) + 7.0 / 3.0 -
         2.0 * constants::kEulerGamma;
}

double strong_binary_variance_asymptotic(int n) { return 4.0 * std::log(static_cast<double>(n)); }

// ---- weak model ----

BigInt weak_count(int n) {
  require(n >= 1, "weak_count: n >= 1");
  return tables::weak_g(static_cast<unsigned>(n));
}

DistRow weak_steps_dist(int n) {
  require(n >= 1, "weak_steps_dist: n >= 1");
  // Rolling triangle: rows[m][k] = g_{m,k}; row m needs all previous rows, so
  // keep the full prefix (quadratic memory in n, fine for table-sized n).
  std::vector<Poly> rows(static_cast<size_t>(n) + 1);
  rows[1] = Poly{BigInt(1ul)};  // single leaf, zero steps
  std::vector<BigInt> binrow(static_cast<size_t>(n) + 1);
  binrow[1] = BigInt(1ul);  // binom(0,0)
  for (int m = 2; m <= n; m++) {
    binrow[m] = BigInt(1ul);
    for (int k = m - 1; k >= 2; k--) binrow[k] += binrow[k - 1];
    Poly row(static_cast<size_t>(m));
    for (int j = 1; j <= m - 1; j++) {
      const Poly& prev = rows[j];
      for (size_t k = 0; k < prev.size(); k++)
        if (!prev[k].is_zero()) row[k + 1].addmul(binrow[j], prev[k]);
    }
    rows[m] = std::move(row);
  }
  return DistRow{n, "steps", std::move(rows[n])};
}

DistRow BivariateTruncation::dist_row(int n) const {
  return DistRow{n, "internal-nodes", rows[static_cast<size_t>(n)]};
}

BivariateTruncation weak_internal_nodes_dist(int max_n) {
  require(max_n >= 1, "weak_internal_nodes_dist: max_n >= 1");
  BivariateTruncation out;
  out.max_n = max_n;
  out.rows.resize(static_cast<size_t>(max_n) + 1);
  out.rows[1] = {BigInt(1ul)};
  // a_{n,k} = sum_{j<n} sum_{r>=1} binom(j,r) binom(n-j-1,r-1) a_{j,k-r}:
  // j leaves of the predecessor, r of them expanded; compositions of the
  // size increase across the expanded leaves give the second binomial.
  for (int n = 2; n <= max_n; n++) {
    Poly row(static_cast<size_t>(n));
    for (int j = 1; j <= n - 1; j++) {
      const Poly& prev = out.rows[j];
      int rmax = std::min(j, n - j);
      for (int r = 1; r <= rmax; r++) {
        BigInt c = tables::binomial(j, r) *
                   tables::binomial(static_cast<unsigned long>(n - j - 1),
                                    static_cast<unsigned long>(r - 1));
        if (c.is_zero()) continue;
        for (size_t k = 0; k < prev.size(); k++)
          if (!prev[k].is_zero()) row[k + r].addmul(c, prev[k]);
      }
    }
    out.rows[n] = std::move(row);
  }
  return out;
}

double weak_count_asymptotic_log(int n) {
  require(n >= 2, "weak_count_asymptotic_log: n >= 2");
  double lg = std::lgamma(static_cast<double>(n));  // ln (n-1)!
  return lg - std::log(2.0) - n * std::log(constants::kLn2);
}

double weak_count_asymptotic_ratio(int n) {
  double exact_log = weak_count(n).log();
  return std::exp(weak_count_asymptotic_log(n) - exact_log);
}

}  // namespace schroeder
