#include "schroeder/rng.hpp"

#include <bit>
#include <stdexcept>

namespace schroeder {

uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t worker_seed(uint64_t seed, uint64_t worker) {
  // (worker+1)-th SplitMix64 output of `seed`: the state advances by the
  // golden-ratio increment per step, so it can be jumped to directly.
  uint64_t state = seed + worker * 0x9E3779B97F4A7C15ull;
  return splitmix64_next(state);
}

uint64_t RngHandle::bits(unsigned w) {
  if (w == 0) return 0;
  if (w > 64) throw std::invalid_argument("bits: w <= 64");
  bits_consumed_ += w;
  uint64_t out = 0;
  unsigned got = 0;
  while (got < w) {
    if (buffered_ == 0) {
      buffer_ = engine_();
      buffered_ = 64;
    }
    unsigned take = std::min(buffered_, w - got);
    out |= (buffer_ & ((take == 64) ? ~uint64_t{0} : ((uint64_t{1} << take) - 1))) << got;
    buffer_ = take == 64 ? 0 : buffer_ >> take;
    buffered_ -= take;
    got += take;
  }
  return out;
}

uint64_t RngHandle::rand_int(uint64_t a, uint64_t b) {
  if (a > b) throw std::invalid_argument("rand_int: a <= b");
  draws_++;
  if (a == b) return a;
  // Power-of-two envelope with remainder recycling: grow a uniform value
  // v in [0, span) one bit at a time, fold the rejected tail back in.
  // Expected cost is below log2(span) + 2 bits.
  const uint64_t span = b - a + 1;
  if (span > (uint64_t{1} << 62)) throw std::invalid_argument("rand_int: span too large");
  uint64_t v = 1;  // envelope size
  uint64_t c = 0;  // uniform in [0, v)
  while (true) {
    v <<= 1;
    c = (c << 1) | bits(1);
    if (v >= span) {
      if (c < span) return a + c;
      v -= span;
      c -= span;
    }
  }
}

BigInt RngHandle::rand_below(const BigInt& bound) {
  if (bound.sign() <= 0) throw std::invalid_argument("rand_below: bound > 0");
  draws_++;
  BigInt top = bound;
  top -= BigInt(1);
  if (top.is_zero()) return BigInt(0);
  size_t w = top.bit_length();
  BigInt v;
  while (true) {
    mpz_set_ui(v.raw(), 0);
    size_t remaining = w;
    while (remaining > 0) {
      unsigned chunk = remaining >= 64 ? 64 : static_cast<unsigned>(remaining);
      uint64_t word = bits(chunk);
      mpz_mul_2exp(v.raw(), v.raw(), chunk);
      mpz_add_ui(v.raw(), v.raw(), word);
      remaining -= chunk;
    }
    if (v < bound) return v;
  }
}

}  // namespace schroeder
