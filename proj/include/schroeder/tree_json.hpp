#pragma once

#include <stdexcept>
#include <string>

#include "schroeder/tree.hpp"

namespace schroeder {

// Schema: {"root": NODE}; NODE = "leaf" | {"label": k, "children": [NODE, ...]}.
std::string to_json(const LabeledTree& t);

struct JsonSchemaError : std::runtime_error {
  std::string path;  // JSON pointer-ish path, e.g. $.root.children[1]
  JsonSchemaError(std::string p, const std::string& what)
      : std::runtime_error(what + " (at " + p + ")"), path(std::move(p)) {}
};

LabeledTree from_json(const std::string& text);

}  // namespace schroeder
