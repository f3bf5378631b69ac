#pragma once

#include "schroeder/bigint.hpp"

namespace schroeder {

struct WeakInternalMean {
  BigInt numerator;  // sum_k k * a_{n,k}
  BigInt total;      // g_n
  Rational mean;
};

// Direct big-integer evaluation of the coupled recurrences
//   g_n = sum_{k<n} binom(n-1,k-1) g_k
//   m_n = sum_{k<n} binom(n-1,k-1) m_k + sum_{j<n} j binom(n-2,j-1) g_j.
// Quadratic in huge multiplications; fine up to a few thousand.
WeakInternalMean weak_internal_mean_direct(int n);

// Exact evaluation through truncated power series over word-size primes with
// CRT reconstruction (verified against spare primes). Fast at large n.
WeakInternalMean weak_internal_mean_exact(int n);

}  // namespace schroeder
