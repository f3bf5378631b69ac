#pragma once

#include <vector>

#include "schroeder/bigint.hpp"
#include "schroeder/rng.hpp"
#include "schroeder/tree.hpp"

namespace schroeder {

// Ordered tuple of positive parts.
struct Composition {
  std::vector<int64_t> parts;

  int64_t sum() const;
  size_t count() const { return parts.size(); }
};

// Compositions of n into k parts, ranked by the branch order of the
// recurrence C(n,k) = C(n-1,k) + C(n-1,k-1): the first branch increments the
// last part, the second appends a part of size 1. Ranks live in
// [0, binom(n-1,k-1)).
Composition unrank_composition(int64_t n, int64_t k, const BigInt& rank);
BigInt rank_composition(const Composition& c);

// Total order over weakly increasing trees: by size; within a size, blocks of
// descending predecessor size k; within a block, composition rank is the
// high-order key and predecessor rank (recursively) the low-order one.
// unrank_weak realizes rank -> tree; rank_weak is its two-sided inverse.
LabeledTree unrank_weak(int64_t n, const BigInt& rank);
BigInt rank_weak(const LabeledTree& t);

// Uniform over the g_n trees of size n: an exact-uniform rank below g_n by
// rejection sampling, then unrank.
LabeledTree sample_weak(int64_t n, RngHandle& rng);

// Step and internal-node counts of unrank_weak(n, rank), computed from the
// rank chain alone (no tree assembly); both counts are functions of the peel,
// which makes large sampled cohorts affordable.
struct WeakPeelCounts {
  int64_t steps = 0;
  int64_t internal_nodes = 0;
};
WeakPeelCounts peel_weak_rank(int64_t n, const BigInt& rank);

// Applies one growth step: part 1 keeps the leaf, part l > 1 expands the
// leaf into an internal node with l fresh leaves labeled new_label; parts
// pair with the leaves in canonical order.
void apply_composition(LabeledTree& t, const Composition& c, int new_label);

}  // namespace schroeder
