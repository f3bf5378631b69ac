#pragma once

#include <string>
#include <vector>

#include "schroeder/tree.hpp"

namespace schroeder {

// Permutation of {1..n}. The tree correspondence is defined on the class of
// permutations in which 1 appears before 2.
struct Permutation {
  std::vector<int> values;

  size_t size() const { return values.size(); }
  bool is_permutation() const;
  // 1 appears before 2 (requires n >= 2).
  bool one_before_two() const;

  static Permutation parse(const std::string& text);  // "4,1,2,5,3"
  std::string to_string() const;
};

// Maximal interval of consecutive integers inside a block: {first..first+length-1}.
struct Run {
  int first = 0;
  int length = 0;
};

// Ordered list of disjoint nonempty integer sets (blocks kept sorted).
// Complete when the union is exactly {1..total}; incomplete partitions are
// legal inputs to normalize.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;

  size_t total_size() const;
  bool disjoint_nonempty() const;
  bool is_complete() const;

  static OrderedPartition parse(const std::string& text);  // "3,4|1,5,7|2,6"
  std::string to_string() const;
};

// Maximal ascending runs of a sorted block, in ascending order.
std::vector<Run> runs(const std::vector<int>& block);

// Order-isomorphic relabeling onto {1..total}, preserving block order.
OrderedPartition normalize(const OrderedPartition& p);

// Permutations (1 before 2) <-> strongly increasing trees, size preserving.
LabeledTree perm_to_tree(const Permutation& sigma);
Permutation tree_to_perm(const LabeledTree& t);

// Complete ordered partitions of {1..m} <-> weakly increasing trees of size m+1.
LabeledTree partition_to_tree(const OrderedPartition& p);
OrderedPartition tree_to_partition(const LabeledTree& t);

// Shared tree-editing helpers (canonical leaf order).
// Replaces the leaf at `leaf_node` by an internal node with `arity` fresh leaves.
void expand_leaf(LabeledTree& t, int32_t leaf_node, int label, int arity);

}  // namespace schroeder
