#pragma once

#include <stdexcept>
#include <string>

#include "schroeder/tree.hpp"

namespace schroeder {

// Dialect: leaves print as `x`; an internal node prints as
// `(child,child,...)label` with at least two children; the tree ends with `;`.
// Example: `((x,x)2,x)1;`
std::string to_newick(const LabeledTree& t);

struct ParseError : std::runtime_error {
  size_t position;  // byte offset into the input
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

LabeledTree parse_newick(const std::string& text);

}  // namespace schroeder
