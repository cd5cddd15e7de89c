#pragma once

#include <vector>

#include "bcast/metrics.hpp"
#include "bcast/tree.hpp"

namespace bcast {

/// A diametrical path v_0..v_d together with the limbs hanging off it.
///
/// limb[i] holds the vertices reachable from v_i without touching any
/// other spine vertex (v_i included, listed first). leaf_count[i] counts
/// every leaf neighbour of v_i in the whole tree, endpoints included.
struct SpineDecomposition {
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> limb;
  std::vector<int> leaf_count;
  std::vector<bool> is_stem;
  std::vector<bool> is_strong_stem;
  std::vector<int> limb_of;  // vertex -> spine index of its limb

  int diameter() const { return static_cast<int>(spine.size()) - 1; }
  Vertex at(int i) const { return spine[static_cast<std::size_t>(i)]; }

  /// The same decomposition read from v_d to v_0.
  SpineDecomposition reversed() const;
};

/// Deterministic decomposition: among all diametrical paths, the one whose
/// vertex sequence (in its lexicographically smaller orientation) is
/// smallest.
SpineDecomposition spine_decomposition(const LabeledTree& t);

/// Decomposition along a caller-chosen diametrical path. Throws InputError
/// if `path` is not a path of length diam(t).
SpineDecomposition decompose_along(const LabeledTree& t, const std::vector<Vertex>& path);

/// Every diametrical path, each in its smaller orientation, sorted.
std::vector<std::vector<Vertex>> all_diametrical_paths(const LabeledTree& t);

/// Order >= 3 and deleting the leaves leaves a path.
bool is_caterpillar(const LabeledTree& t);

}  // namespace bcast
