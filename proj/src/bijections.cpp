#include "schroeder/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schroeder {

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) pos++;
    if (pos != item.size()) throw std::invalid_argument("malformed integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace

bool Permutation::is_permutation() const {
  std::vector<char> seen(values.size() + 1, 0);
  for (int v : values) {
    if (v < 1 || v > static_cast<int>(values.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Permutation::one_before_two() const {
  for (int v : values) {
    if (v == 1) return true;
    if (v == 2) return false;
  }
  return false;
}

Permutation Permutation::parse(const std::string& text) {
  Permutation p;
  p.values = parse_int_list(text, ',');
  if (!p.is_permutation()) throw std::invalid_argument("not a permutation of 1..n: " + text);
  return p;
}

std::string Permutation::to_string() const {
  std::string out;
  for (size_t i = 0; i < values.size(); i++) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

size_t OrderedPartition::total_size() const {
  size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

bool OrderedPartition::disjoint_nonempty() const {
  std::set<int> all;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (int v : b)
      if (!all.insert(v).second) return false;
  }
  return true;
}

bool OrderedPartition::is_complete() const {
  if (!disjoint_nonempty()) return false;
  size_t n = total_size();
  for (const auto& b : blocks)
    for (int v : b)
      if (v < 1 || v > static_cast<int>(n)) return false;
  return true;
}

OrderedPartition OrderedPartition::parse(const std::string& text) {
  OrderedPartition p;
  std::string block;
  std::istringstream in(text);
  while (std::getline(in, block, '|')) {
    auto vals = parse_int_list(block, ',');
    std::sort(vals.begin(), vals.end());
    p.blocks.push_back(std::move(vals));
  }
  if (p.blocks.empty()) throw std::invalid_argument("empty partition");
  if (!p.disjoint_nonempty()) throw std::invalid_argument("blocks must be disjoint and nonempty");
  return p;
}

std::string OrderedPartition::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); i++) {
    if (i) out.push_back('|');
    for (size_t j = 0; j < blocks[i].size(); j++) {
      if (j) out.push_back(',');
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

std::vector<Run> runs(const std::vector<int>& block) {
  if (block.empty()) throw std::invalid_argument("runs: empty block");
  std::vector<Run> out;
  Run cur{block[0], 1};
  for (size_t i = 1; i < block.size(); i++) {
    if (block[i] == block[i - 1] + 1) {
      cur.length++;
    } else {
      out.push_back(cur);
      cur = Run{block[i], 1};
    }
  }
  out.push_back(cur);
  return out;
}

OrderedPartition normalize(const OrderedPartition& p) {
  if (!p.disjoint_nonempty())
    throw std::invalid_argument("normalize: blocks must be disjoint and nonempty");
  std::vector<int> all;
  for (const auto& b : p.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::map<int, int> rank;
  for (size_t i = 0; i < all.size(); i++) rank[all[i]] = static_cast<int>(i) + 1;
  OrderedPartition out;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(rank[v]);
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

void expand_leaf(LabeledTree& t, int32_t leaf_node, int label, int arity) {
  t.nodes[leaf_node].label = label;
  for (int i = 0; i < arity; i++) {
    int32_t leaf = t.add_leaf();
    t.nodes[leaf_node].children.push_back(leaf);
  }
}

// ---- permutations <-> strongly increasing trees ----

LabeledTree perm_to_tree(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n < 2) throw std::invalid_argument("perm_to_tree: need size >= 2");
  if (!sigma.is_permutation()) throw std::invalid_argument("perm_to_tree: not a permutation");
  if (!sigma.one_before_two())
    throw std::invalid_argument("perm_to_tree: 1 must appear before 2");

  // Position of m within the subsequence of values <= m.
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int m = 3; m <= n; m++) {
    int count = 0;
    for (int v : sigma.values) {
      if (v <= m) count++;
      if (v == m) break;
    }
    pos[m] = count;
  }

  LabeledTree t;
  int32_t root = t.add_internal(1);
  t.root = root;
  int32_t la = t.add_leaf();
  int32_t lb = t.add_leaf();
  t.nodes[root].children = {la, lb};
  int32_t last_internal = root;
  int next_label = 2;
  for (int m = 3; m <= n; m++) {
    if (pos[m] == m) {
      int32_t leaf = t.add_leaf();
      t.nodes[last_internal].children.push_back(leaf);
    } else {
      auto leaves = leaves_in_order(t);
      int32_t leaf = leaves[static_cast<size_t>(pos[m]) - 1];
      expand_leaf(t, leaf, next_label++, 2);
      last_internal = leaf;
    }
  }
  return t;
}

Permutation tree_to_perm(const LabeledTree& input) {
  if (!validate(input, ModelKind::Strong).valid)
    throw std::invalid_argument("tree_to_perm: not a valid strongly increasing tree");
  const int n = static_cast<int>(size(input));
  if (n < 2) throw std::invalid_argument("tree_to_perm: need size >= 2");

  LabeledTree t = input;
  std::vector<int32_t> by_label(static_cast<size_t>(num_internal(t)) + 1, -1);
  for (int32_t i = 0; i < static_cast<int32_t>(t.nodes.size()); i++)
    if (!t.nodes[i].children.empty()) by_label[t.nodes[i].label] = i;

  int top = static_cast<int>(num_internal(t));
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int m = n; m >= 3; m--) {
    int32_t nu = by_label[top];
    if (t.nodes[nu].children.size() >= 3) {
      // Undo a rightmost-leaf append to the most recent internal node.
      t.nodes[nu].children.pop_back();
      pos[m] = m;
    } else {
      // Undo the creation of the most recent (binary, leaf-children) node.
      t.nodes[nu].children.clear();
      t.nodes[nu].label = 0;
      auto leaves = leaves_in_order(t);
      auto it = std::find(leaves.begin(), leaves.end(), nu);
      pos[m] = static_cast<int>(it - leaves.begin()) + 1;
      top--;
    }
  }

  Permutation sigma;
  sigma.values = {1, 2};
  for (int m = 3; m <= n; m++)
    sigma.values.insert(sigma.values.begin() + (pos[m] - 1), m);
  return sigma;
}

// ---- ordered partitions <-> weakly increasing trees ----

LabeledTree partition_to_tree(const OrderedPartition& p) {
  if (!p.is_complete())
    throw std::invalid_argument("partition_to_tree: partition must be complete over 1..n");
  LabeledTree t;
  int32_t root = t.add_internal(1);
  t.root = root;
  for (size_t i = 0; i < p.blocks[0].size() + 1; i++) {
    int32_t leaf = t.add_leaf();
    t.nodes[root].children.push_back(leaf);
  }

  std::vector<int> ground;  // union of processed blocks, sorted
  ground = p.blocks[0];
  std::sort(ground.begin(), ground.end());
  for (size_t i = 1; i < p.blocks.size(); i++) {
    for (int v : p.blocks[i]) ground.insert(std::upper_bound(ground.begin(), ground.end(), v), v);
    // Image of block i under normalization of blocks 1..i.
    std::vector<int> img;
    img.reserve(p.blocks[i].size());
    for (int v : p.blocks[i]) {
      auto it = std::lower_bound(ground.begin(), ground.end(), v);
      img.push_back(static_cast<int>(it - ground.begin()) + 1);
    }
    std::sort(img.begin(), img.end());
    // Expand at the first element of each run, against the current leaf order.
    for (const Run& r : runs(img)) {
      auto leaves = leaves_in_order(t);
      if (r.first < 1 || r.first > static_cast<int>(leaves.size()))
        throw std::invalid_argument("partition_to_tree: run index out of range");
      expand_leaf(t, leaves[static_cast<size_t>(r.first) - 1], static_cast<int>(i) + 1,
                  r.length + 1);
    }
  }
  return t;
}

OrderedPartition tree_to_partition(const LabeledTree& input) {
  if (!validate(input, ModelKind::Weak).valid)
    throw std::invalid_argument("tree_to_partition: not a valid weakly increasing tree");
  const int n = static_cast<int>(size(input));
  if (n < 2) throw std::invalid_argument("tree_to_partition: need size >= 2");

  LabeledTree t = input;
  const int levels = max_label(t);
  // Recover, per level, the normalized image of its block.
  std::vector<std::vector<int>> images(static_cast<size_t>(levels) + 1);
  for (int lvl = levels; lvl >= 2; lvl--) {
    std::vector<std::pair<int, int>> fa;  // (first element, arity), collected right to left
    while (true) {
      // Rightmost node carrying this level's label, by preorder.
      int32_t target = -1;
      {
        std::vector<int32_t> stack{t.root};
        while (!stack.empty()) {
          int32_t i = stack.back();
          stack.pop_back();
          if (t.nodes[i].label == lvl && !t.nodes[i].children.empty()) target = i;
          for (auto it = t.nodes[i].children.rbegin(); it != t.nodes[i].children.rend(); ++it)
            stack.push_back(*it);
        }
      }
      if (target < 0) break;
      int arity = static_cast<int>(t.nodes[target].children.size());
      t.nodes[target].children.clear();
      t.nodes[target].label = 0;
      auto leaves = leaves_in_order(t);
      auto it = std::find(leaves.begin(), leaves.end(), target);
      fa.emplace_back(static_cast<int>(it - leaves.begin()) + 1, arity);
    }
    std::reverse(fa.begin(), fa.end());
    std::vector<int> img;
    for (auto [first, arity] : fa)
      for (int v = first; v <= first + arity - 2; v++) img.push_back(v);
    images[lvl] = std::move(img);
  }
  // Level 1: what remains must be the root with leaf children. (Collapsed
  // nodes leave orphans in the arena, so inspect reachable structure only.)
  int root_arity = static_cast<int>(t.nodes[t.root].children.size());
  bool base = t.nodes[t.root].label == 1;
  for (int32_t c : t.nodes[t.root].children) base = base && t.is_leaf(c);
  if (!base)
    throw std::invalid_argument("tree_to_partition: peeling did not reach the base tree");
  images[1].resize(static_cast<size_t>(root_arity) - 1);
  for (int v = 1; v <= root_arity - 1; v++) images[1][v - 1] = v;

  // Un-normalize from the last block backwards.
  std::vector<int> actual(static_cast<size_t>(n) - 1);
  for (int v = 1; v <= n - 1; v++) actual[v - 1] = v;
  OrderedPartition out;
  out.blocks.resize(levels);
  for (int lvl = levels; lvl >= 1; lvl--) {
    std::vector<int> block;
    block.reserve(images[lvl].size());
    for (int x : images[lvl]) block.push_back(actual[static_cast<size_t>(x) - 1]);
    std::sort(block.begin(), block.end());
    out.blocks[lvl - 1] = std::move(block);
    // Remove the consumed positions, preserving order.
    std::vector<int> next;
    next.reserve(actual.size() - images[lvl].size());
    size_t k = 0;
    for (size_t idx = 0; idx < actual.size(); idx++) {
      if (k < images[lvl].size() && static_cast<int>(idx) + 1 == images[lvl][k]) {
        k++;
      } else {
        next.push_back(actual[idx]);
      }
    }
    actual = std::move(next);
  }
  if (!actual.empty())
    throw std::invalid_argument("tree_to_partition: ground set not fully consumed");
  return out;
}

}  // namespace schroeder
