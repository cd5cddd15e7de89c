#pragma once

#include <functional>
#include <vector>

#include "bcast/canonical.hpp"
#include "bcast/tree.hpp"

namespace bcast {

struct EnumerationLimits {
  int max_tree_order = 13;
  int max_subtree_host_order = 12;
};

/// One representative per isomorphism class of trees on n vertices, in
/// increasing canonical-code order, optionally restricted to caterpillars.
///
/// Rooted trees are generated as canonical level sequences and the
/// resulting free trees deduplicated by canonical code. Throws CapExceeded
/// when n exceeds the configured limit.
std::vector<LabeledTree> enumerate_trees(int n, bool caterpillars_only = false,
                                         const EnumerationLimits& limits = {});

/// Visits every canonical level sequence of a rooted tree on n vertices as a
/// parent vector (parent[i] is the parent of vertex i+1).
void for_each_rooted_tree(int n, const std::function<void(const std::vector<Vertex>&)>& visit);

struct Subtree {
  LabeledTree tree;
  std::vector<Vertex> label_map;  // subtree label -> host label
};

/// Every connected induced subgraph of t with at least two vertices, in
/// increasing order of the host vertex bitmask.
void for_each_subtree(const LabeledTree& t, const std::function<void(const Subtree&)>& visit,
                      const EnumerationLimits& limits = {});

std::vector<Subtree> enumerate_subtrees(const LabeledTree& t, const EnumerationLimits& limits = {});

}  // namespace bcast
