#include "schroeder/series_mod.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace schroeder::series_mod {

Montgomery::Montgomery(uint64_t prime) : p(prime) {
  // Newton iteration for -p^{-1} mod 2^64.
  uint64_t inv = prime;
  for (int i = 0; i < 5; i++) inv *= 2 - prime * inv;
  ninv = ~inv + 1;  // = -inv
  // 2^128 mod p via repeated doubling of 2^64 mod p.
  uint64_t r = (~uint64_t{0}) % p + 1;  // 2^64 mod p
  __uint128_t acc = (static_cast<__uint128_t>(r) * r) % p;
  r2 = static_cast<uint64_t>(acc);
}

uint64_t Montgomery::pow(uint64_t base_mont, uint64_t e) const {
  uint64_t r = one();
  uint64_t b = base_mont;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t Montgomery::inv(uint64_t x_mont) const { return pow(x_mont, p - 2); }

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // Deterministic Miller-Rabin base set for 64-bit integers.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; i++) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<uint64_t> find_ntt_primes(size_t count, int min_two_adicity) {
  std::vector<uint64_t> primes;
  const uint64_t step = uint64_t{1} << min_two_adicity;
  uint64_t k = (uint64_t{1} << 61) / step;  // candidates just below 2^61
  while (primes.size() < count && k > 1) {
    uint64_t cand = k * step + 1;
    if (is_prime_u64(cand)) primes.push_back(cand);
    k--;
  }
  if (primes.size() < count) throw std::runtime_error("prime search exhausted");
  return primes;
}

void ntt(std::vector<uint64_t>& a, bool inverse, const Montgomery& mont) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("ntt size must be a power of two");
  const int lg = std::countr_zero(n);

  // Bit reversal permutation.
  for (size_t i = 1, j = 0; i < n; i++) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // 2^s | p-1 primitive root of unity: w = x^{(p-1)/2^s} with w^{2^{s-1}} = -1.
  const uint64_t p = mont.p;
  const int s = std::countr_zero(p - 1);
  if ((size_t{1} << s) < n) throw std::invalid_argument("prime two-adicity too small for ntt size");
  static thread_local uint64_t cached_p = 0, cached_w = 0;
  if (cached_p != p) {
    uint64_t odd = (p - 1) >> s;
    std::mt19937_64 gen(88172645463325252ull);
    while (true) {
      uint64_t x = gen() % (p - 3) + 2;
      uint64_t w = mont.pow(mont.to(x), odd);
      uint64_t t = w;
      for (int i = 0; i < s - 1; i++) t = mont.mul(t, t);
      if (t == mont.sub(0, mont.one())) {
        cached_p = p;
        cached_w = w;
        break;
      }
    }
  }
  uint64_t root = cached_w;
  for (int i = 0; i < s - lg; i++) root = mont.mul(root, root);  // order 2^lg
  if (inverse) root = mont.inv(root);

  for (int len = 1, stage = 0; len < static_cast<int>(n); len <<= 1, stage++) {
    // twiddle for this stage: root^(2^(lg-1-stage))
    uint64_t w_len = root;
    for (int i = 0; i < lg - 1 - stage; i++) w_len = mont.mul(w_len, w_len);
    for (size_t i = 0; i < n; i += 2 * len) {
      uint64_t w = mont.one();
      for (size_t j = 0; j < static_cast<size_t>(len); j++) {
        uint64_t u = a[i + j];
        uint64_t v = mont.mul(a[i + j + len], w);
        a[i + j] = mont.add(u, v);
        a[i + j + len] = mont.sub(u, v);
        w = mont.mul(w, w_len);
      }
    }
  }

  if (inverse) {
    uint64_t n_inv = mont.inv(mont.to(n));
    for (auto& x : a) x = mont.mul(x, n_inv);
  }
}

std::vector<uint64_t> poly_mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                               size_t len, const Montgomery& mont) {
  if (a.empty() || b.empty() || len == 0) return std::vector<uint64_t>(len, 0);
  size_t need = std::min(len, a.size() + b.size() - 1);
  size_t sz = std::bit_ceil(a.size() + b.size() - 1);
  std::vector<uint64_t> fa(sz, 0), fb(sz, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  ntt(fa, false, mont);
  ntt(fb, false, mont);
  for (size_t i = 0; i < sz; i++) fa[i] = mont.mul(fa[i], fb[i]);
  ntt(fa, true, mont);
  fa.resize(need);
  fa.resize(len, 0);
  return fa;
}

std::vector<uint64_t> series_inverse(const std::vector<uint64_t>& a, size_t len,
                                     const Montgomery& mont) {
  if (a.empty() || a[0] == 0) throw std::invalid_argument("series_inverse: a[0] must be invertible");
  std::vector<uint64_t> q{mont.inv(a[0])};
  size_t cur = 1;
  const uint64_t two = mont.add(mont.one(), mont.one());
  while (cur < len) {
    cur = std::min(cur * 2, len);
    // q <- q * (2 - a*q) mod z^cur
    std::vector<uint64_t> head(a.begin(), a.begin() + std::min(cur, a.size()));
    std::vector<uint64_t> t = poly_mul(head, q, cur, mont);
    for (auto& x : t) x = mont.sub(0, x);
    t[0] = mont.add(t[0], two);
    q = poly_mul(q, t, cur, mont);
  }
  q.resize(len, 0);
  return q;
}

WeakMeanResidues weak_mean_residues(int n, uint64_t prime) {
  if (n < 1) throw std::invalid_argument("weak_mean_residues: n >= 1");
  Montgomery mont(prime);
  if (n == 1) return {1 % prime, 0};
  const size_t L = static_cast<size_t>(n);  // coefficients z^0..z^{n-1}

  // Factorials and inverse factorials in Montgomery form.
  std::vector<uint64_t> fact(L), inv_fact(L);
  fact[0] = mont.one();
  for (size_t i = 1; i < L; i++) fact[i] = mont.mul(fact[i - 1], mont.to(i));
  inv_fact[L - 1] = mont.inv(fact[L - 1]);
  for (size_t i = L - 1; i > 0; i--) inv_fact[i - 1] = mont.mul(inv_fact[i], mont.to(i));

  // D = 2 - e^z, Q = 1/D.
  std::vector<uint64_t> d(L);
  d[0] = mont.one();
  for (size_t q = 1; q < L; q++) d[q] = mont.sub(0, inv_fact[q]);
  std::vector<uint64_t> Q = series_inverse(d, L, mont);

  // F' = e^z * sum_q (q+1) Q[q] z^q; F[q] = F'[q-1]/q.
  std::vector<uint64_t> s(L);
  for (size_t q = 0; q < L; q++) s[q] = mont.mul(Q[q], mont.to(q + 1));
  std::vector<uint64_t> e(L);
  for (size_t q = 0; q < L; q++) e[q] = inv_fact[q];
  std::vector<uint64_t> fp = poly_mul(e, s, L, mont);
  std::vector<uint64_t> f(L, 0);
  for (size_t q = 1; q < L; q++) {
    uint64_t invq = mont.mul(inv_fact[q], fact[q - 1]);
    f[q] = mont.mul(fp[q - 1], invq);
  }

  std::vector<uint64_t> M = poly_mul(f, Q, L, mont);

  WeakMeanResidues out;
  out.g = mont.from(mont.mul(Q[L - 1], fact[L - 1]));
  out.m = mont.from(mont.mul(M[L - 1], fact[L - 1]));
  return out;
}

}  // namespace schroeder::series_mod
