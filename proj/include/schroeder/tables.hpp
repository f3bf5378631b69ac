#pragma once

#include <vector>

#include "schroeder/bigint.hpp"

namespace schroeder::tables {

// Memoized exact tables. Growth is guarded by a per-table mutex; references
// stay valid once returned. Warm the tables before spawning sampler threads.

const BigInt& factorial(unsigned n);

// 0 when k > n; no failure modes.
BigInt binomial(unsigned long n, unsigned long k);

// Stirling partition number S(n,k) (memoized triangle); 0 when k > n.
const BigInt& stirling_partition(unsigned n, unsigned k);

// H_n = 1 + 1/2 + ... + 1/n as an exact rational; H_0 = 0.
Rational harmonic(unsigned n);

// Number of weakly increasing trees with n leaves:
//   g_1 = 1, g_n = sum_{k=1}^{n-1} binom(n-1,k-1) g_k.
const BigInt& weak_g(unsigned n);

// Ensures weak_g is computed up to n (single-threaded warm-up helper).
void warm_weak_g(unsigned n);

}  // namespace schroeder::tables
