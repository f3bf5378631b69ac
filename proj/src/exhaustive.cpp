#include <stdexcept>
#include <string>
#include <unordered_set>

#include "schroeder/bijections.hpp"
#include "schroeder/newick.hpp"
#include "schroeder/samplers.hpp"

namespace schroeder {

namespace {

// The growth history of a tree is recoverable from its labels, so the
// expansion below reaches every tree exactly once; the duplicate set is a
// guard, not a filter.
struct StrongGen {
  int target;
  const std::function<void(const LabeledTree&)>& emit;
  std::unordered_set<std::string> seen;

  void grow(LabeledTree& t, int64_t leaf_count, int next_label) {
    if (leaf_count == target) {
      std::string key = to_newick(t);
      if (!seen.insert(key).second)
        throw std::logic_error("exhaustive_strong: duplicate tree generated");
      emit(t);
      return;
    }
    auto leaves = leaves_in_order(t);
    int64_t budget = target - leaf_count;
    for (int32_t leaf : leaves) {
      for (int arity = 2; arity - 1 <= budget; arity++) {
        LabeledTree next = t;
        expand_leaf(next, leaf, next_label, arity);
        grow(next, leaf_count + arity - 1, next_label + 1);
      }
    }
  }
};

struct WeakGen {
  int target;
  const std::function<void(const LabeledTree&)>& emit;
  std::unordered_set<std::string> seen;

  // One growth step expands a nonempty subset of the current leaves, every
  // expanded leaf getting the same new label.
  void step(LabeledTree& t, int64_t leaf_count, int next_label) {
    if (leaf_count == target) {
      std::string key = to_newick(t);
      if (!seen.insert(key).second)
        throw std::logic_error("exhaustive_weak: duplicate tree generated");
      emit(t);
      return;
    }
    auto leaves = leaves_in_order(t);
    choose(t, leaves, 0, leaf_count, false, next_label);
  }

  // Walk leaf positions; each is kept or expanded with some arity.
  void choose(LabeledTree& t, const std::vector<int32_t>& leaves, size_t idx,
              int64_t leaf_count, bool any, int next_label) {
    if (leaf_count > target) return;
    if (idx == leaves.size()) {
      if (any) step(t, leaf_count, next_label + 1);
      return;
    }
    choose(t, leaves, idx + 1, leaf_count, any, next_label);
    int64_t budget = target - leaf_count;
    for (int arity = 2; arity - 1 <= budget; arity++) {
      LabeledTree next = t;
      expand_leaf(next, leaves[idx], next_label, arity);
      choose(next, leaves, idx + 1, leaf_count + arity - 1, true, next_label);
    }
  }
};

}  // namespace

void exhaustive_strong(int n, const std::function<void(const LabeledTree&)>& emit, int bound) {
  if (n < 1) throw std::invalid_argument("exhaustive_strong: n >= 1");
  if (n > bound)
    throw std::invalid_argument("exhaustive_strong: n = " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
  LabeledTree leaf = LabeledTree::single_leaf();
  if (n == 1) {
    emit(leaf);
    return;
  }
  StrongGen gen{n, emit, {}};
  gen.grow(leaf, 1, 1);
}

void exhaustive_weak(int n, const std::function<void(const LabeledTree&)>& emit, int bound) {
  if (n < 1) throw std::invalid_argument("exhaustive_weak: n >= 1");
  if (n > bound)
    throw std::invalid_argument("exhaustive_weak: n = " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
  LabeledTree leaf = LabeledTree::single_leaf();
  if (n == 1) {
    emit(leaf);
    return;
  }
  WeakGen gen{n, emit, {}};
  gen.step(leaf, 1, 1);
}

std::vector<LabeledTree> exhaustive_strong_all(int n, int bound) {
  std::vector<LabeledTree> out;
  exhaustive_strong(n, [&](const LabeledTree& t) { out.push_back(t); }, bound);
  return out;
}

std::vector<LabeledTree> exhaustive_weak_all(int n, int bound) {
  std::vector<LabeledTree> out;
  exhaustive_weak(n, [&](const LabeledTree& t) { out.push_back(t); }, bound);
  return out;
}

}  // namespace schroeder
