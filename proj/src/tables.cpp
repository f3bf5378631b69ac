#include "schroeder/tables.hpp"

#include <deque>
#include <mutex>

namespace schroeder::tables {

namespace {

std::mutex g_fact_mu;
std::deque<BigInt> g_fact;  // g_fact[n] = n!

std::mutex g_stirling_mu;
std::deque<std::vector<BigInt>> g_stirling;  // g_stirling[n][k], k <= n

std::mutex g_harmonic_mu;
std::deque<Rational> g_harmonic;

std::mutex g_weak_mu;
std::deque<BigInt> g_weak;          // g_weak[n] = g_n (index 0 unused)
std::vector<BigInt> g_weak_binrow;  // binom(n-1, k-1) for the last computed n

}  // namespace

const BigInt& factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_fact_mu);
  if (g_fact.empty()) g_fact.emplace_back(1ul);
  while (g_fact.size() <= n) {
    BigInt next = g_fact.back();
    next *= static_cast<unsigned long>(g_fact.size());
    g_fact.push_back(std::move(next));
  }
  return g_fact[n];
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;  // 0
  mpz_bin_uiui(r.raw(), n, k);
  return r;
}

const BigInt& stirling_partition(unsigned n, unsigned k) {
  static const BigInt zero;
  if (k > n) return zero;
  std::lock_guard<std::mutex> lock(g_stirling_mu);
  if (g_stirling.empty()) g_stirling.push_back({BigInt(1ul)});  // S(0,0)=1
  while (g_stirling.size() <= n) {
    unsigned m = static_cast<unsigned>(g_stirling.size());
    const auto& prev = g_stirling[m - 1];
    std::vector<BigInt> row(m + 1);
    // S(m,k) = k*S(m-1,k) + S(m-1,k-1)
    for (unsigned j = 1; j <= m; j++) {
      BigInt v;
      if (j < prev.size()) {
        v = prev[j];
        v *= static_cast<unsigned long>(j);
      }
      if (j - 1 < prev.size()) v += prev[j - 1];
      row[j] = std::move(v);
    }
    g_stirling.push_back(std::move(row));
  }
  return g_stirling[n][k];
}

Rational harmonic(unsigned n) {
  std::lock_guard<std::mutex> lock(g_harmonic_mu);
  if (g_harmonic.empty()) g_harmonic.emplace_back(0l);
  while (g_harmonic.size() <= n) {
    Rational next = g_harmonic.back();
    next += Rational(BigInt(1), BigInt(static_cast<long>(g_harmonic.size())));
    g_harmonic.push_back(std::move(next));
  }
  return g_harmonic[n];
}

const BigInt& weak_g(unsigned n) {
  std::lock_guard<std::mutex> lock(g_weak_mu);
  if (g_weak.empty()) {
    g_weak.emplace_back(0ul);  // unused g_0
    g_weak.emplace_back(1ul);  // g_1
    g_weak_binrow.assign(2, BigInt());
    g_weak_binrow[1] = BigInt(1ul);  // binom(0,0)
  }
  while (g_weak.size() <= n) {
    unsigned m = static_cast<unsigned>(g_weak.size());
    // update row in place: binom(m-2,.) -> binom(m-1,.)
    g_weak_binrow.resize(m + 1);
    g_weak_binrow[m] = BigInt(1ul);
    for (unsigned k = m - 1; k >= 2; k--) g_weak_binrow[k] += g_weak_binrow[k - 1];
    BigInt acc;
    for (unsigned k = 1; k <= m - 1; k++) acc.addmul(g_weak_binrow[k], g_weak[k]);
    g_weak.push_back(std::move(acc));
  }
  return g_weak[n];
}

void warm_weak_g(unsigned n) { (void)weak_g(n); }

}  // namespace schroeder::tables
