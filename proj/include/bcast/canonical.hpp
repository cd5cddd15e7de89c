#pragma once

#include <string>
#include <vector>

#include "bcast/tree.hpp"

namespace bcast {

/// Isomorphism-class identifier for a tree.
///
/// The code is the balanced-parenthesis string of the tree rooted at its
/// center, children ordered by their own codes; bicentral trees take the
/// smaller of the two rooted codes. Equal codes <=> isomorphic trees.
struct CanonicalCode {
  std::string code;

  int order() const { return static_cast<int>(code.size() / 2); }
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const LabeledTree& t);

/// AHU code of t rooted at `root`.
std::string rooted_code(const LabeledTree& t, Vertex root);

/// One or two center vertices.
std::vector<Vertex> tree_centers(const LabeledTree& t);

/// Rebuilds a representative tree (root = vertex 0, preorder labels).
/// Throws InputError on malformed codes.
LabeledTree tree_from_code(const CanonicalCode& c);

}  // namespace bcast
