#include <doctest.h>

#include <sstream>

#include "schroeder/distrows.hpp"
#include "schroeder/samplers.hpp"
#include "schroeder/series_mod.hpp"
#include "schroeder/stats.hpp"
#include "schroeder/tables.hpp"
#include "schroeder/weak_mean.hpp"

using namespace schroeder;

namespace {

std::vector<BigInt> row_of(const std::vector<long>& v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

DistRow census(ModelKind model, int n, ParamKind param, size_t width) {
  DistRow row;
  row.n = n;
  row.param = to_string(param);
  row.coeffs.assign(width, BigInt(0));
  auto count = [&](const LabeledTree& t) {
    row.coeffs[static_cast<size_t>(measure_param(t, param))] += BigInt(1);
  };
  if (model == ModelKind::Strong) {
    exhaustive_strong(n, count);
  } else {
    exhaustive_weak(n, count);
  }
  return row;
}

}  // namespace

TEST_SUITE_BEGIN("exact-enum");

TEST_CASE("strong counts") {
  CHECK(strong_count(1) == BigInt(1));
  CHECK(strong_count(2) == BigInt(1));
  CHECK(strong_count(4) == BigInt(12));
  CHECK(strong_count(7) == BigInt(2520));
  // n!/2 for n >= 2
  for (int n = 2; n <= 30; n++) {
    BigInt half_fact = tables::factorial(n);
    half_fact.divexact_ui(2);
    CHECK(strong_count(n) == half_fact);
  }
  // against the exhaustive process
  for (int n = 1; n <= 7; n++) {
    int64_t c = 0;
    exhaustive_strong(n, [&](const LabeledTree&) { c++; });
    CHECK(BigInt(c) == strong_count(n));
  }
}

TEST_CASE("strong internal-node rows") {
  CHECK(strong_internal_nodes_dist(5).coeffs == row_of({0, 1, 9, 26, 24}));
  CHECK(strong_internal_nodes_dist(6).coeffs == row_of({0, 1, 14, 71, 154, 120}));
  CHECK(strong_internal_nodes_dist(4).coeffs == strong_internal_nodes_closed_form(4));
  for (int n = 2; n <= 80; n++) {
    DistRow row = strong_internal_nodes_dist(n);
    CHECK(row.coeffs == strong_internal_nodes_closed_form(n));
    CHECK(row.total() == strong_count(n));
  }
}

TEST_CASE("stirling cycle identity") {
  CHECK(stirling_cycle_row(4).coeffs == row_of({6, 11, 6, 1}));
  CHECK(check_cycle_identity(2));
  CHECK(check_cycle_identity(5));
  for (int n = 2; n <= 60; n++) CHECK(check_cycle_identity(n));
}

TEST_CASE("strong internal mean and variance") {
  CHECK(strong_internal_mean(2) == Rational(BigInt(1)));
  CHECK(strong_internal_mean(5) == Rational(BigInt(193), BigInt(60)));
  for (int n = 2; n <= 60; n++)
    CHECK(strong_internal_nodes_dist(n).mean() == strong_internal_mean(n));
  // asymptotic comparison at n=1000
  double exact = strong_internal_mean(1000).to_double();
  CHECK(std::abs(exact - strong_internal_mean_asymptotic(1000)) < 1e-3);
  // variance approaches ln n + gamma - pi^2/6 - 5/4
  double v = strong_internal_variance(500).to_double();
  CHECK(std::abs(v - strong_internal_variance_asymptotic(500)) < 0.01);
}

TEST_CASE("strong root arity rows and probabilities") {
  CHECK(strong_root_arity_dist(2).coeffs == row_of({0, 0, 1}));
  CHECK(strong_root_arity_dist(6).coeffs == row_of({0, 0, 240, 90, 24, 5, 1}));
  for (int n = 2; n <= 60; n++) {
    DistRow row = strong_root_arity_dist(n);
    CHECK(row.total() == strong_count(n));
    // closed form n! k/(k+1)! on the 2..n-1 band, n-1 and 1 at the top
    for (int k = 2; k <= n - 1; k++) {
      BigInt expect = tables::factorial(n) * BigInt(k);
      Rational r(expect, tables::factorial(k + 1));
      CHECK(Rational(row.coeffs[k]) == r);
    }
    if (n > 2) {
      CHECK(row.coeffs[n] == BigInt(1));
      CHECK(row.coeffs[n - 1] == BigInt(n - 1));
    }
  }
  // probabilities sum to one exactly
  for (int n : {5, 10, 60}) {
    Rational sum;
    for (int k = 2; k <= n; k++) sum += strong_root_arity_probability(n, k);
    CHECK(sum == Rational(BigInt(1)));
  }
}

TEST_CASE("strong root leaves rows") {
  CHECK(strong_root_leaves_dist(2).coeffs == row_of({0, 0, 1}));
  CHECK(strong_root_leaves_dist(3).coeffs == row_of({0, 2, 0, 1}));
  for (int n = 2; n <= 60; n++) CHECK(strong_root_leaves_dist(n).total() == strong_count(n));
  CHECK(strong_root_leaves_dist(6).coeffs == census(ModelKind::Strong, 6,
                                                    ParamKind::RootLeaves, 7).coeffs);
}

TEST_CASE("strong binary node rows and mean") {
  CHECK(strong_binary_nodes_dist(2).coeffs == row_of({0, 1}));
  CHECK(strong_binary_nodes_dist(3).coeffs == row_of({1, 0, 2}));
  for (int n = 2; n <= 60; n++) CHECK(strong_binary_nodes_dist(n).total() == strong_count(n));
  for (int n = 3; n <= 60; n++)
    CHECK(strong_binary_nodes_dist(n).mean() == strong_binary_mean_closed_form(n));
  CHECK(strong_binary_nodes_dist(6).coeffs == census(ModelKind::Strong, 6,
                                                     ParamKind::BinaryNodes, 6).coeffs);
}

TEST_CASE("strong censuses at n = 6") {
  CHECK(strong_internal_nodes_dist(6).coeffs ==
        census(ModelKind::Strong, 6, ParamKind::InternalNodes, 6).coeffs);
  CHECK(strong_root_arity_dist(6).coeffs ==
        census(ModelKind::Strong, 6, ParamKind::RootArity, 7).coeffs);
}

TEST_CASE("weak counts") {
  const long expected[] = {0, 1, 1, 3, 13, 75, 541, 4683};
  for (int n = 1; n <= 7; n++) CHECK(weak_count(n) == BigInt(expected[n]));
  for (int n = 1; n <= 6; n++) {
    int64_t c = 0;
    exhaustive_weak(n, [&](const LabeledTree&) { c++; });
    CHECK(BigInt(c) == weak_count(n));
  }
  // ordered-set-partition totals: g_{n+1} = sum_k k! S(n,k)
  for (int n = 1; n <= 50; n++) {
    BigInt bell;
    for (int k = 0; k <= n; k++) bell.addmul(tables::factorial(k), tables::stirling_partition(n, k));
    CHECK(bell == weak_count(n + 1));
  }
  // strictly increasing from n = 3
  for (int n = 3; n <= 30; n++) CHECK(weak_count(n) < weak_count(n + 1));
}

TEST_CASE("weak steps rows") {
  CHECK(weak_steps_dist(5).coeffs == row_of({0, 1, 14, 36, 24}));
  CHECK(weak_steps_dist(7).coeffs == row_of({0, 1, 62, 540, 1560, 1800, 720}));
  // the k!-Stirling form holds with the (n-1)-shift
  for (int n = 2; n <= 60; n++) {
    DistRow row = weak_steps_dist(n);
    CHECK(row.total() == weak_count(n));
    for (int k = 1; k < n; k++) {
      BigInt expect = tables::factorial(k) * tables::stirling_partition(n - 1, k);
      CHECK(row.coeffs[k] == expect);
    }
  }
  CHECK(weak_steps_dist(5).coeffs == census(ModelKind::Weak, 5, ParamKind::Steps, 5).coeffs);
  // 3! S(4,3) = 36
  CHECK(tables::factorial(3) * tables::stirling_partition(4, 3) == BigInt(36));
}

TEST_CASE("helper tables") {
  CHECK(tables::stirling_partition(4, 2) == BigInt(7));
  CHECK(tables::binomial(3, 1) == BigInt(3));
  CHECK(tables::binomial(3, 7) == BigInt(0));
  CHECK(tables::stirling_partition(3, 7) == BigInt(0));
  CHECK(tables::harmonic(5) == Rational(BigInt(137), BigInt(60)));
}

TEST_CASE("weak internal-node table") {
  BivariateTruncation biv = weak_internal_nodes_dist(7);
  CHECK(biv.row(3) == row_of({0, 1, 2}));
  CHECK(biv.row(4) == row_of({0, 1, 5, 7}));
  for (int n = 1; n <= 7; n++) {
    BigInt sum;
    for (const auto& c : biv.row(n)) sum += c;
    CHECK(sum == weak_count(n));
  }
  CHECK(biv.dist_row(5).coeffs ==
        census(ModelKind::Weak, 5, ParamKind::WeakInternalNodes, 5).coeffs);
}

TEST_CASE("weak internal mean: two exact routes agree") {
  BivariateTruncation biv = weak_internal_nodes_dist(60);
  for (int n = 2; n <= 60; n++) {
    auto direct = weak_internal_mean_direct(n);
    CHECK(direct.total == weak_count(n));
    CHECK(biv.dist_row(n).mean() == direct.mean);
  }
  CHECK(weak_internal_mean_direct(4).numerator == BigInt(32));
  CHECK(weak_internal_mean_direct(6).numerator == BigInt(2261));
}

TEST_CASE("weak internal mean: series engine equals the direct recurrence") {
  for (int n : {2, 5, 40, 65, 100, 150, 300}) {
    auto a = weak_internal_mean_direct(n);
    auto b = weak_internal_mean_exact(n);
    CHECK(a.numerator == b.numerator);
    CHECK(a.total == b.total);
  }
}

TEST_CASE("series arithmetic mod p") {
  using namespace series_mod;
  auto primes = find_ntt_primes(3, 20);
  REQUIRE(primes.size() == 3);
  for (uint64_t p : primes) CHECK(is_prime_u64(p));
  Montgomery mont(primes[0]);
  // poly_mul against a naive convolution
  std::vector<uint64_t> a{1, 2, 3, 4}, b{5, 6, 7};
  std::vector<uint64_t> am, bm;
  for (uint64_t x : a) am.push_back(mont.to(x));
  for (uint64_t x : b) bm.push_back(mont.to(x));
  auto cm = poly_mul(am, bm, 6, mont);
  std::vector<uint64_t> naive(6, 0);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++)
      if (i + j < 6) naive[i + j] = (naive[i + j] + a[i] * b[j]) % primes[0];
  for (size_t i = 0; i < 6; i++) CHECK(mont.from(cm[i]) == naive[i]);
  // series inverse: a * inv(a) = 1
  auto inv = series_inverse(am, 8, mont);
  auto prod = poly_mul(am, inv, 8, mont);
  CHECK(mont.from(prod[0]) == 1);
  for (size_t i = 1; i < 8; i++) CHECK(mont.from(prod[i]) == 0);
  // residues of known totals
  auto r = weak_mean_residues(6, primes[1]);
  CHECK(r.g == 541);
  CHECK(r.m == 2261);
}

TEST_CASE("asymptotic count comparison") {
  CHECK(weak_count_asymptotic_ratio(7) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(weak_count_asymptotic_ratio(20) == doctest::Approx(1.0).epsilon(1e-4));
  // the bound is asymptotic: at n=2 it overshoots by ~4%
  CHECK(weak_count_asymptotic_ratio(2) == doctest::Approx(1.0407).epsilon(1e-3));
}

TEST_CASE("row export formats") {
  DistRow row = strong_internal_nodes_dist(5);
  std::ostringstream csv;
  row.to_csv(csv);
  CHECK(csv.str() == "5,0,0\n5,1,1\n5,2,9\n5,3,26\n5,4,24\n");
  CHECK(row.to_json() ==
        R"({"n":5,"param":"internal-nodes","coeffs":["0","1","9","26","24"]})");
}

TEST_SUITE_END();
