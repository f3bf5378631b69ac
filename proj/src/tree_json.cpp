#include "schroeder/tree_json.hpp"

#include <json.hpp>

#include <vector>

namespace schroeder {

namespace {

using nlohmann::ordered_json;

ordered_json node_to_json(const LabeledTree& t, int32_t root) {
  // Iterative post-order assembly to survive deep trees.
  struct Frame {
    int32_t node;
    size_t next_child;
    ordered_json out;
  };
  std::vector<Frame> st;
  st.push_back({root, 0, ordered_json()});
  ordered_json result;
  while (!st.empty()) {
    Frame& f = st.back();
    const auto& node = t.nodes[f.node];
    if (node.children.empty()) {
      ordered_json leaf = "leaf";
      st.pop_back();
      if (st.empty()) {
        result = std::move(leaf);
      } else {
        st.back().out["children"].push_back(std::move(leaf));
      }
      continue;
    }
    if (f.next_child == 0) {
      f.out["label"] = node.label;
      f.out["children"] = ordered_json::array();
    }
    if (f.next_child < node.children.size()) {
      int32_t c = node.children[f.next_child++];
      st.push_back({c, 0, ordered_json()});
    } else {
      ordered_json done = std::move(f.out);
      st.pop_back();
      if (st.empty()) {
        result = std::move(done);
      } else {
        st.back().out["children"].push_back(std::move(done));
      }
    }
  }
  return result;
}

int32_t node_from_json(const ordered_json& j, LabeledTree& t, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "leaf")
      throw JsonSchemaError(path, "string node must be \"leaf\"");
    return t.add_leaf();
  }
  if (!j.is_object()) throw JsonSchemaError(path, "node must be \"leaf\" or an object");
  if (!j.contains("label") || !j["label"].is_number_integer())
    throw JsonSchemaError(path + ".label", "missing or non-integer label");
  long label = j["label"].get<long>();
  if (label < 1) throw JsonSchemaError(path + ".label", "label must be >= 1");
  if (!j.contains("children") || !j["children"].is_array())
    throw JsonSchemaError(path + ".children", "missing or non-array children");
  const auto& kids = j["children"];
  if (kids.size() < 2) throw JsonSchemaError(path + ".children", "need at least two children");
  std::vector<int32_t> children;
  children.reserve(kids.size());
  for (size_t i = 0; i < kids.size(); i++)
    children.push_back(
        node_from_json(kids[i], t, path + ".children[" + std::to_string(i) + "]"));
  int32_t idx = t.add_internal(static_cast<int>(label));
  t.nodes[idx].children = std::move(children);
  return idx;
}

}  // namespace

std::string to_json(const LabeledTree& t) {
  ordered_json j;
  j["root"] = node_to_json(t, t.root);
  return j.dump();
}

LabeledTree from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonSchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("root"))
    throw JsonSchemaError("$", "top level must be an object with a \"root\" key");
  LabeledTree t;
  t.root = node_from_json(j["root"], t, "$.root");
  return t;
}

}  // namespace schroeder
