#pragma once

#include <cstdint>
#include <random>

#include "schroeder/bigint.hpp"

namespace schroeder {

// SplitMix64 step; also the documented worker-seed mixing function.
uint64_t splitmix64_next(uint64_t& state);

// Stream i is seeded with the (i+1)-th SplitMix64 output of the base seed.
// Cohorts derive one stream per sample, so results do not depend on how
// samples are split across workers.
uint64_t worker_seed(uint64_t seed, uint64_t worker);

// Deterministic seedable bit source with exact accounting: same seed, same
// sequence; the bit counter adds the width of every requested chunk,
// including rejected draws.
class RngHandle {
 public:
  explicit RngHandle(uint64_t seed) : engine_(seed) {}

  static RngHandle for_worker(uint64_t seed, uint64_t worker) {
    return RngHandle(worker_seed(seed, worker));
  }

  // w <= 64 fresh random bits.
  uint64_t bits(unsigned w);

  // Exactly uniform on {a..b} by rejection over a power-of-two envelope;
  // consumes zero bits when a == b.
  uint64_t rand_int(uint64_t a, uint64_t b);

  // Exactly uniform on [0, bound) by rejection over bit_length(bound-1) bits.
  BigInt rand_below(const BigInt& bound);

  uint64_t bits_consumed() const { return bits_consumed_; }
  uint64_t draw_count() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  uint64_t buffer_ = 0;
  unsigned buffered_ = 0;
  uint64_t bits_consumed_ = 0;
  uint64_t draws_ = 0;
};

}  // namespace schroeder
