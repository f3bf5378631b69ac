#include "schroeder/weak_mean.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "schroeder/series_mod.hpp"

namespace schroeder {

WeakInternalMean weak_internal_mean_direct(int n) {
  if (n < 1) throw std::invalid_argument("weak_internal_mean_direct: n >= 1");
  std::vector<BigInt> g(n + 1), m(n + 1), s(n + 1);
  std::vector<BigInt> row(n + 1), prow(n + 1);
  g[1] = BigInt(1);
  s[1] = BigInt(1);
  row[1] = BigInt(1);  // binom(0,0)
  for (int v = 2; v <= n; v++) {
    for (int k = 1; k <= v - 1; k++) prow[k] = row[k];  // binom(v-2, k-1)
    row[v] = BigInt(1);
    for (int k = v - 1; k >= 2; k--) row[k] += row[k - 1];  // binom(v-1, k-1)
    BigInt gacc, macc, facc;
    for (int k = 1; k <= v - 1; k++) {
      gacc.addmul(row[k], g[k]);
      macc.addmul(row[k], m[k]);
      facc.addmul(prow[k], s[k]);
    }
    g[v] = std::move(gacc);
    macc += facc;
    m[v] = std::move(macc);
    s[v] = g[v];
    s[v] *= static_cast<unsigned long>(v);
  }
  WeakInternalMean out;
  out.numerator = m[n];
  out.total = g[n];
  out.mean = n == 1 ? Rational(BigInt(0)) : Rational(out.numerator, out.total);
  return out;
}

namespace {

// Estimate of log2(g_n): g_n ~ (n-1)!/(2 ln(2)^n). The CRT below adds 96 slack
// bits and verifies the reconstruction against spare primes.
double log2_g_estimate(int n) {
  return std::lgamma(static_cast<double>(n)) / std::log(2.0) -
         n * std::log2(std::log(2.0)) + 16.0;
}

}  // namespace

WeakInternalMean weak_internal_mean_exact(int n) {
  if (n < 1) throw std::invalid_argument("weak_internal_mean_exact: n >= 1");
  if (n <= 64) return weak_internal_mean_direct(n);

  // m_n <= n * g_n; primes cover the bound with slack, plus two check primes.
  double bits = log2_g_estimate(n) + std::log2(static_cast<double>(n)) + 96.0;
  int two_adicity = 1;
  while ((size_t{1} << two_adicity) < 4 * static_cast<size_t>(n)) two_adicity++;
  size_t nprimes = static_cast<size_t>(bits / 60.0) + 3;
  std::vector<uint64_t> primes = series_mod::find_ntt_primes(nprimes + 2, two_adicity);

  std::vector<uint64_t> gres(primes.size()), mres(primes.size());
  for (size_t i = 0; i < primes.size(); i++) {
    auto r = series_mod::weak_mean_residues(n, primes[i]);
    gres[i] = r.g;
    mres[i] = r.m;
  }

  // Incremental CRT over the first nprimes legs.
  auto crt = [&](const std::vector<uint64_t>& res) {
    BigInt x(0ul);
    BigInt prod(1ul);
    for (size_t i = 0; i < nprimes; i++) {
      uint64_t p = primes[i];
      uint64_t xi = mpz_fdiv_ui(x.raw(), p);
      uint64_t diff = res[i] >= xi ? res[i] - xi : res[i] + p - xi;
      uint64_t pinv = mpz_fdiv_ui(prod.raw(), p);
      // t = diff / prod mod p
      series_mod::Montgomery mont(p);
      uint64_t t = mont.from(mont.mul(mont.to(diff), mont.inv(mont.to(pinv))));
      BigInt add = prod;
      add *= static_cast<unsigned long>(t);
      x += add;
      prod *= static_cast<unsigned long>(p);
    }
    return x;
  };

  WeakInternalMean out;
  out.total = crt(gres);
  out.numerator = crt(mres);

  // Verification against the spare legs.
  for (size_t i = nprimes; i < primes.size(); i++) {
    if (mpz_fdiv_ui(out.total.raw(), primes[i]) != gres[i] ||
        mpz_fdiv_ui(out.numerator.raw(), primes[i]) != mres[i])
      throw std::runtime_error("weak_internal_mean_exact: CRT verification failed");
  }

  out.mean = Rational(out.numerator, out.total);
  return out;
}

}  // namespace schroeder
