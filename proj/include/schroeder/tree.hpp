#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schroeder {

enum class ModelKind { Strong, Weak };

const char* to_string(ModelKind m);

// Rooted plane tree over an index arena. Leaves carry no label (label 0);
// internal nodes carry a positive label recording the step that created them.
// A size-1 tree is a single leaf. Immutable by convention after construction.
struct LabeledTree {
  struct Node {
    int label = 0;                  // 0 for leaves
    std::vector<int32_t> children;  // ordered
  };

  std::vector<Node> nodes;
  int32_t root = -1;

  static LabeledTree single_leaf();

  bool is_leaf(int32_t i) const { return nodes[i].children.empty(); }
  int32_t add_leaf() {
    nodes.push_back(Node{});
    return static_cast<int32_t>(nodes.size()) - 1;
  }
  int32_t add_internal(int label) {
    nodes.push_back(Node{label, {}});
    return static_cast<int32_t>(nodes.size()) - 1;
  }
};

// Number of leaves.
int64_t size(const LabeledTree& t);
// Number of internal (labeled) nodes.
int64_t num_internal(const LabeledTree& t);
// Largest label; 0 for the single leaf.
int max_label(const LabeledTree& t);

// Canonical order: left-to-right depth-first. Every position-based operation
// in this library indexes leaves this way.
std::vector<int32_t> leaves_in_order(const LabeledTree& t);

// Structural equality of plane labeled trees, independent of arena numbering.
bool canonical_equal(const LabeledTree& a, const LabeledTree& b);

struct Violation {
  int32_t node = -1;
  std::string rule;  // stable identifier, e.g. "arity", "chronology"
  std::string message;
};

struct ValidityReport {
  bool valid = false;
  std::vector<Violation> violations;
};

// Structural corruption (bad indices, shared nodes, cycles, arity < 2) is
// reported as violations, never thrown.
ValidityReport validate(const LabeledTree& t, ModelKind model);

}  // namespace schroeder
