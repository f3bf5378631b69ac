#include "schroeder/newick.hpp"

#include <cctype>
#include <vector>

namespace schroeder {

namespace {

// Iterative; trees may be deep (a path of binary nodes has depth ~ size).
void write_tree(const LabeledTree& t, std::string& out) {
  struct Frame {
    int32_t node;
    size_t next_child;
  };
  std::vector<Frame> st;
  st.push_back({t.root, 0});
  while (!st.empty()) {
    auto& f = st.back();
    const auto& node = t.nodes[f.node];
    if (node.children.empty()) {
      out.push_back('x');
      st.pop_back();
      continue;
    }
    if (f.next_child == 0) out.push_back('(');
    if (f.next_child < node.children.size()) {
      if (f.next_child > 0) out.push_back(',');
      int32_t c = node.children[f.next_child++];
      st.push_back({c, 0});
    } else {
      out.push_back(')');
      out += std::to_string(node.label);
      st.pop_back();
    }
  }
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  LabeledTree run() {
    LabeledTree t;
    t.root = parse_node(t);
    expect(';');
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input after ';'");
    return t;
  }

 private:
  // Iterative descent; stack holds the children collected so far per open '('.
  int32_t parse_node(LabeledTree& t) {
    std::vector<std::vector<int32_t>> open;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
      int32_t finished = -1;
      if (s_[pos_] == 'x') {
        pos_++;
        finished = t.add_leaf();
      } else if (s_[pos_] == '(') {
        pos_++;
        open.emplace_back();
        continue;
      } else {
        throw ParseError(pos_, "expected 'x' or '('");
      }
      // A node just finished; close as many groups as the input demands.
      while (true) {
        if (open.empty()) return finished;
        open.back().push_back(finished);
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(pos_, "unterminated '('");
        if (s_[pos_] == ',') {
          pos_++;
          break;  // next sibling
        }
        if (s_[pos_] != ')') throw ParseError(pos_, "expected ',' or ')'");
        pos_++;
        if (open.back().size() < 2)
          throw ParseError(pos_, "internal node needs at least two children");
        int label = integer();
        finished = t.add_internal(label);
        t.nodes[finished].children = std::move(open.back());
        open.pop_back();
      }
    }
  }

  int integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) pos_++;
    if (pos_ == start) throw ParseError(pos_, "expected internal-node label");
    if (pos_ - start > 9) throw ParseError(start, "label too large");
    int v = std::stoi(s_.substr(start, pos_ - start));
    if (v < 1) throw ParseError(start, "label must be positive");
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    pos_++;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) pos_++;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

std::string to_newick(const LabeledTree& t) {
  std::string out;
  write_tree(t, out);
  out.push_back(';');
  return out;
}

LabeledTree parse_newick(const std::string& text) { return Parser(text).run(); }

}  // namespace schroeder
