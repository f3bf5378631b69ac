#pragma once

#include <functional>
#include <vector>

#include "schroeder/rng.hpp"
#include "schroeder/tree.hpp"

namespace schroeder {

// Uniform sampler over strongly increasing trees of size n. Draws rand_int(1,i)
// for i = 3..n (n-2 draws); k = i appends a rightmost leaf to the most recent
// internal node, k < i replaces the k-th leaf in canonical order by a new
// binary node. Runs in O(n log n) word operations via an offline slot
// assignment, producing exactly the tree the canonical-order process defines.
LabeledTree sample_strong(int64_t n, RngHandle& rng);

// Reference implementation of the same process with quadratic rescans; used
// as an oracle for the fast sampler.
LabeledTree sample_strong_reference(int64_t n, RngHandle& rng);

// Exhaustive generators: every valid tree of size n exactly once, by
// expansion of the growth process with duplicate detection. Refuse (throw
// std::invalid_argument) above the bound; the defaults keep outputs in the
// tens of thousands.
inline constexpr int kExhaustiveStrongBound = 8;
inline constexpr int kExhaustiveWeakBound = 7;

void exhaustive_strong(int n, const std::function<void(const LabeledTree&)>& emit,
                       int bound = kExhaustiveStrongBound);
void exhaustive_weak(int n, const std::function<void(const LabeledTree&)>& emit,
                     int bound = kExhaustiveWeakBound);

std::vector<LabeledTree> exhaustive_strong_all(int n, int bound = kExhaustiveStrongBound);
std::vector<LabeledTree> exhaustive_weak_all(int n, int bound = kExhaustiveWeakBound);

}  // namespace schroeder
