#include "schroeder/tree.hpp"

#include <stack>

namespace schroeder {

const char* to_string(ModelKind m) { return m == ModelKind::Strong ? "strong" : "weak"; }

LabeledTree LabeledTree::single_leaf() {
  LabeledTree t;
  t.root = t.add_leaf();
  return t;
}

int64_t size(const LabeledTree& t) {
  int64_t n = 0;
  for (const auto& node : t.nodes)
    if (node.children.empty()) n++;
  return n;
}

int64_t num_internal(const LabeledTree& t) {
  return static_cast<int64_t>(t.nodes.size()) - size(t);
}

int max_label(const LabeledTree& t) {
  int m = 0;
  for (const auto& node : t.nodes)
    if (node.label > m) m = node.label;
  return m;
}

std::vector<int32_t> leaves_in_order(const LabeledTree& t) {
  std::vector<int32_t> out;
  if (t.root < 0) return out;
  std::stack<int32_t> st;
  st.push(t.root);
  while (!st.empty()) {
    int32_t i = st.top();
    st.pop();
    const auto& node = t.nodes[i];
    if (node.children.empty()) {
      out.push_back(i);
    } else {
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) st.push(*it);
    }
  }
  return out;
}

bool canonical_equal(const LabeledTree& a, const LabeledTree& b) {
  if (a.root < 0 || b.root < 0) return a.root == b.root;
  std::stack<std::pair<int32_t, int32_t>> st;
  st.push({a.root, b.root});
  while (!st.empty()) {
    auto [x, y] = st.top();
    st.pop();
    const auto& nx = a.nodes[x];
    const auto& ny = b.nodes[y];
    if (nx.label != ny.label || nx.children.size() != ny.children.size()) return false;
    for (size_t i = 0; i < nx.children.size(); i++) st.push({nx.children[i], ny.children[i]});
  }
  return true;
}

}  // namespace schroeder
