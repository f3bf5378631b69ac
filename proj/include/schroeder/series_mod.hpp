#pragma once

#include <cstdint>
#include <vector>

namespace schroeder::series_mod {

// Fixed-prime modular arithmetic (Montgomery form) and power-series tools
// used to evaluate big-integer recurrences prime-by-prime, with the exact
// integers recovered afterwards by CRT.

struct Montgomery {
  uint64_t p = 0;
  uint64_t ninv = 0;  // -p^{-1} mod 2^64
  uint64_t r2 = 0;    // 2^128 mod p

  explicit Montgomery(uint64_t prime);

  uint64_t reduce(__uint128_t t) const {
    uint64_t m = static_cast<uint64_t>(t) * ninv;
    uint64_t r = static_cast<uint64_t>((t + static_cast<__uint128_t>(m) * p) >> 64);
    return r >= p ? r - p : r;
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return reduce(static_cast<__uint128_t>(a) * b);
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t r = a + b;
    return r >= p ? r - p : r;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t to(uint64_t x) const { return mul(x % p, r2); }
  uint64_t from(uint64_t x) const { return reduce(x); }
  uint64_t one() const { return to(1); }
  uint64_t pow(uint64_t base_mont, uint64_t e) const;
  uint64_t inv(uint64_t x_mont) const;  // p prime
};

bool is_prime_u64(uint64_t n);

// Primes of the form k*2^s + 1 with s >= min_two_adicity, descending from
// below 2^61; suitable as NTT moduli and as CRT legs.
std::vector<uint64_t> find_ntt_primes(size_t count, int min_two_adicity);

// In-place NTT over a power-of-two-sized vector in Montgomery form.
void ntt(std::vector<uint64_t>& a, bool inverse, const Montgomery& mont);

// c = a*b truncated to `len` coefficients (Montgomery form).
std::vector<uint64_t> poly_mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                               size_t len, const Montgomery& mont);

// Multiplicative inverse of a power series (a[0] invertible), Newton iteration.
std::vector<uint64_t> series_inverse(const std::vector<uint64_t>& a, size_t len,
                                     const Montgomery& mont);

// Residues of the weak-model totals at size n:
//   g_n   (number of trees) and

//   m_n = sum_k k * a_{n,k}  (internal-node mean numerator),
// computed via M(z) = F(z)/(2-e^z), F' = e^z * sum (q+1) Q[q] z^q, Q = 1/(2-e^z).
struct WeakMeanResidues {
  uint64_t g = 0;
  uint64_t m = 0;
};
WeakMeanResidues weak_mean_residues(int n, uint64_t prime);

}  // namespace schroeder::series_mod
