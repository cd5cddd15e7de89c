#pragma once

#include <vector>

#include "bcast/tree.hpp"

namespace bcast {

/// All-pairs distances and the eccentricity profile of a tree.
struct MetricSummary {
  int n = 0;
  std::vector<int> dist;  // row-major n x n, edge counts
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;

  int distance(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u * n + v)]; }
  int eccentricity(Vertex v) const { return ecc[static_cast<std::size_t>(v)]; }
  bool is_peripheral(Vertex v) const { return eccentricity(v) == diameter; }
};

/// BFS from every vertex.
MetricSummary metric_summary(const LabeledTree& t);

/// Distances from one source.
std::vector<int> bfs_distances(const LabeledTree& t, Vertex source);

/// The unique u-w path, u first.
std::vector<Vertex> tree_path(const LabeledTree& t, Vertex u, Vertex w);

}  // namespace bcast
