#include <algorithm>
#include <stack>

#include "schroeder/tree.hpp"

namespace schroeder {

namespace {

void add(ValidityReport& r, int32_t node, const char* rule, std::string msg) {
  r.violations.push_back(Violation{node, rule, std::move(msg)});
}

}  // namespace

ValidityReport validate(const LabeledTree& t, ModelKind model) {
  ValidityReport rep;
  const int32_t n = static_cast<int32_t>(t.nodes.size());

  if (t.root < 0 || t.root >= n) {
    add(rep, t.root, "structure", "root index out of range");
    return rep;
  }

  // Structural pass: child indices in range, each node at most one parent,
  // no revisit (cycle), everything reachable from the root.
  std::vector<int8_t> seen(n, 0);
  bool corrupt = false;
  std::stack<int32_t> st;
  st.push(t.root);
  seen[t.root] = 1;
  while (!st.empty()) {
    int32_t i = st.top();
    st.pop();
    for (int32_t c : t.nodes[i].children) {
      if (c < 0 || c >= n) {
        add(rep, i, "structure", "child index out of range");
        corrupt = true;
        continue;
      }
      if (seen[c]) {
        add(rep, i, "structure", "node reached twice (shared child or cycle)");
        corrupt = true;
        continue;
      }
      seen[c] = 1;
      st.push(c);
    }
  }
  for (int32_t i = 0; i < n; i++)
    if (!seen[i]) add(rep, i, "structure", "node not reachable from root");
  if (corrupt) return rep;

  // Node-local rules.
  int internal_count = 0;
  for (int32_t i = 0; i < n; i++) {
    const auto& node = t.nodes[i];
    if (node.children.empty()) {
      if (node.label != 0) add(rep, i, "leaf-label", "leaf carries a label");
    } else {
      internal_count++;
      if (node.children.size() < 2) add(rep, i, "arity", "internal node with arity < 2");
      if (node.label < 1) add(rep, i, "label-range", "internal node without positive label");
    }
  }

  // Chronology: labels strictly increase from parent to internal child.
  for (int32_t i = 0; i < n; i++) {
    const auto& node = t.nodes[i];
    if (node.children.empty()) continue;
    for (int32_t c : node.children) {
      const auto& child = t.nodes[c];
      if (!child.children.empty() && child.label <= node.label)
        add(rep, c, "chronology", "child label not greater than parent label");
    }
  }

  // Label usage. Strong: labels are exactly {1..L} with L = number of
  // internal nodes, all distinct. Weak: labels cover {1..max label} (each
  // step number used at least once), repetitions allowed.
  if (model == ModelKind::Strong) {
    const int L = internal_count;
    std::vector<int> uses(static_cast<size_t>(L) + 1, 0);
    for (int32_t i = 0; i < n; i++) {
      const auto& node = t.nodes[i];
      if (node.children.empty()) continue;
      if (node.label >= 1 && node.label <= L) {
        uses[node.label]++;
      } else if (node.label > L) {
        add(rep, i, "label-range", "label exceeds the number of internal nodes");
      }
    }
    for (int32_t i = 0; i < n; i++) {
      const auto& node = t.nodes[i];
      if (node.children.empty()) continue;
      if (node.label >= 1 && node.label <= L && uses[node.label] > 1)
        add(rep, i, "duplicate-label", "label used more than once");
    }
    // Distinct in-range labels on L nodes force exactly {1..L}.
  } else {
    const int L = max_label(t);
    std::vector<int> uses(static_cast<size_t>(L) + 1, 0);
    for (int32_t i = 0; i < n; i++) {
      const auto& node = t.nodes[i];
      if (!node.children.empty() && node.label >= 1) uses[node.label]++;
    }
    for (int v = 1; v <= L; v++)
      if (uses[v] == 0) add(rep, -1, "label-gap", "label " + std::to_string(v) + " unused");
  }

  rep.valid = rep.violations.empty();
  return rep;
}

}  // namespace schroeder
