#include "bcast/metrics.hpp"

#include <algorithm>
#include <queue>

namespace bcast {

std::vector<int> bfs_distances(const LabeledTree& t, Vertex source) {
  std::vector<int> d(static_cast<std::size_t>(t.order()), -1);
  std::queue<Vertex> q;
  d[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : t.neighbours(v)) {
      if (d[static_cast<std::size_t>(w)] < 0) {
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

MetricSummary metric_summary(const LabeledTree& t) {
  MetricSummary m;
  m.n = t.order();
  m.dist.resize(static_cast<std::size_t>(m.n * m.n));
  m.ecc.resize(static_cast<std::size_t>(m.n));
  for (Vertex v = 0; v < m.n; ++v) {
    auto row = bfs_distances(t, v);
    std::copy(row.begin(), row.end(), m.dist.begin() + v * m.n);
    m.ecc[static_cast<std::size_t>(v)] = *std::max_element(row.begin(), row.end());
  }
  m.radius = *std::min_element(m.ecc.begin(), m.ecc.end());
  m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
  return m;
}

std::vector<Vertex> tree_path(const LabeledTree& t, Vertex u, Vertex w) {
  // Walk back from u along decreasing distance to w.
  auto d = bfs_distances(t, w);
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != w) {
    for (Vertex x : t.neighbours(cur)) {
      if (d[static_cast<std::size_t>(x)] == d[static_cast<std::size_t>(cur)] - 1) {
        cur = x;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace bcast
