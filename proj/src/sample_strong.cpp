#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schroeder/bijections.hpp"
#include "schroeder/samplers.hpp"

namespace schroeder {

namespace {

// Fenwick tree over slots 1..n supporting "select the k-th free slot".
class FreeSlots {
 public:
  explicit FreeSlots(int64_t n) : n_(n), tree_(static_cast<size_t>(n) + 1, 0) {
    for (int64_t i = 1; i <= n_; i++) {
      tree_[i] += 1;
      int64_t j = i + (i & -i);
      if (j <= n_) tree_[j] += tree_[i];
    }
  }

  // k-th free slot (1-based), then mark it used.
  int64_t take(int64_t k) {
    int64_t pos = 0;
    int64_t rem = k;
    for (int64_t step = highest_; step > 0; step >>= 1) {
      int64_t next = pos + step;
      if (next <= n_ && tree_[next] < rem) {
        pos = next;
        rem -= tree_[next];
      }
    }
    int64_t slot = pos + 1;
    for (int64_t i = slot; i <= n_; i += i & -i) tree_[i] -= 1;
    return slot;
  }

  // k-th free slot without removal.
  int64_t peek(int64_t k) const {
    int64_t pos = 0;
    int64_t rem = k;
    for (int64_t step = highest_; step > 0; step >>= 1) {
      int64_t next = pos + step;
      if (next <= n_ && tree_[next] < rem) {
        pos = next;
        rem -= tree_[next];
      }
    }
    return pos + 1;
  }

  void set_highest() {
    highest_ = 1;
    while (highest_ * 2 <= n_) highest_ *= 2;
  }

 private:
  int64_t n_;
  int64_t highest_ = 1;
  std::vector<int64_t> tree_;
};

}  // namespace

LabeledTree sample_strong(int64_t n, RngHandle& rng) {
  if (n < 1) throw std::invalid_argument("sample_strong: n >= 1");
  if (n == 1) return LabeledTree::single_leaf();

  // Draw the whole choice sequence first (same draw order as the iterative
  // process: rand_int(1, i) for i = 3..n).
  std::vector<int64_t> choice(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = 3; i <= n; i++) choice[i] = static_cast<int64_t>(rng.rand_int(1, i));

  // Leaf-sequence insertion positions, each valid at its own time step.
  // A create at leaf k inserts the new right leaf at position k+1; appends to
  // the current run land right after its previous leaves. The initial two
  // leaves of the root predate all insertions.
  std::vector<int64_t> ins_pos(static_cast<size_t>(n) + 1, 0);
  {
    int64_t run_k = 1;  // root's left leaf position at creation
    int64_t run_appends = 0;
    for (int64_t i = 3; i <= n; i++) {
      if (choice[i] == i) {
        run_appends++;
        ins_pos[i] = run_k + 1 + run_appends;
      } else {
        run_k = choice[i];
        run_appends = 0;
        ins_pos[i] = choice[i] + 1;
      }
    }
  }

  // Offline reverse pass: the final canonical position of each inserted leaf
  // is the p-th currently-free slot, processing insertions newest first. For
  // a create we also need the slot of the leaf it replaced.
  std::vector<int64_t> slot(static_cast<size_t>(n) + 1, 0);
  std::vector<int64_t> parent_slot(static_cast<size_t>(n) + 1, 0);
  FreeSlots fs(n);
  fs.set_highest();
  for (int64_t i = n; i >= 3; i--) {
    slot[i] = fs.take(ins_pos[i]);
    if (choice[i] != i) parent_slot[i] = fs.peek(choice[i]);
  }
  int64_t first_leaf_slot = fs.take(1);
  int64_t second_leaf_slot = fs.take(1);

  // Forward assembly. Slots are the canonical leaf order of the final tree.
  LabeledTree t;
  t.nodes.reserve(static_cast<size_t>(2 * n));
  int32_t root = t.add_internal(1);
  t.root = root;
  std::vector<int32_t> leaf_node(static_cast<size_t>(n) + 1, -1);
  for (int64_t s = 1; s <= n; s++) leaf_node[s] = t.add_leaf();

  struct Owner {
    int32_t node;
    int32_t child_index;
  };
  std::vector<Owner> owner(static_cast<size_t>(n) + 1, Owner{-1, -1});
  t.nodes[root].children = {leaf_node[first_leaf_slot], leaf_node[second_leaf_slot]};
  owner[first_leaf_slot] = {root, 0};
  owner[second_leaf_slot] = {root, 1};

  int32_t last_internal = root;
  int next_label = 2;
  for (int64_t i = 3; i <= n; i++) {
    if (choice[i] == i) {
      auto& kids = t.nodes[last_internal].children;
      owner[slot[i]] = {last_internal, static_cast<int32_t>(kids.size())};
      kids.push_back(leaf_node[slot[i]]);
    } else {
      int64_t old_slot = parent_slot[i];
      int32_t nu = t.add_internal(next_label++);
      Owner o = owner[old_slot];
      t.nodes[o.node].children[o.child_index] = nu;
      t.nodes[nu].children = {leaf_node[old_slot], leaf_node[slot[i]]};
      owner[old_slot] = {nu, 0};
      owner[slot[i]] = {nu, 1};
      last_internal = nu;
    }
  }
  return t;
}

LabeledTree sample_strong_reference(int64_t n, RngHandle& rng) {
  if (n < 1) throw std::invalid_argument("sample_strong_reference: n >= 1");
  if (n == 1) return LabeledTree::single_leaf();
  LabeledTree t;
  int32_t root = t.add_internal(1);
  t.root = root;
  int32_t la = t.add_leaf();
  int32_t lb = t.add_leaf();
  t.nodes[root].children = {la, lb};
  int32_t last_internal = root;
  int next_label = 2;
  for (int64_t i = 3; i <= n; i++) {
    int64_t k = static_cast<int64_t>(rng.rand_int(1, i));
    if (k == i) {
      int32_t leaf = t.add_leaf();
      t.nodes[last_internal].children.push_back(leaf);
    } else {
      auto leaves = leaves_in_order(t);
      int32_t leaf = leaves[static_cast<size_t>(k) - 1];
      expand_leaf(t, leaf, next_label++, 2);
      last_internal = leaf;
    }
  }
  return t;
}

}  // namespace schroeder
