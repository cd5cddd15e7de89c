#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bcast/error.hpp"

namespace bcast {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable tree on the vertices 0..n-1.
///
/// Construction validates that the edge list describes a tree: n >= 2,
/// exactly n-1 edges, endpoints in range, no loops or repeated edges, and
/// connectivity. Adjacency lists are kept sorted so that every traversal
/// is deterministic.
class LabeledTree {
 public:
  /// Throws InputError naming the violated invariant.
  LabeledTree(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return order() - 1; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

LabeledTree build_tree(int n, std::span<const Edge> edges);

inline LabeledTree build_tree(int n, std::initializer_list<Edge> edges) {
  return LabeledTree(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Convenience constructors used by tests, fixtures, and the CLI.
LabeledTree make_path(int n);
LabeledTree make_star(int leaves);

/// Builds a tree from a parent vector: parent[i] is the parent of vertex
/// i+1. Used by enumeration.
LabeledTree tree_from_parents(std::span<const Vertex> parent);

/// The subgraph induced by `vertices` (which must induce a connected
/// subgraph on at least two vertices). Vertex k of the result corresponds
/// to the k-th smallest element of `vertices`.
struct InducedSubtree {
  LabeledTree tree;
  std::vector<Vertex> label_map;  // new label -> original label
};
InducedSubtree induced_subtree(const LabeledTree& t, std::span<const Vertex> vertices);

}  // namespace bcast
