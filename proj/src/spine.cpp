#include "bcast/spine.hpp"

#include <algorithm>
#include <string>

namespace bcast {

namespace {

std::vector<Vertex> smaller_orientation(std::vector<Vertex> p) {
  std::vector<Vertex> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

}  // namespace

SpineDecomposition SpineDecomposition::reversed() const {
  SpineDecomposition r = *this;
  std::reverse(r.spine.begin(), r.spine.end());
  std::reverse(r.limb.begin(), r.limb.end());
  std::reverse(r.leaf_count.begin(), r.leaf_count.end());
  std::reverse(r.is_stem.begin(), r.is_stem.end());
  std::reverse(r.is_strong_stem.begin(), r.is_strong_stem.end());
  const int d = diameter();
  for (int& i : r.limb_of) i = d - i;
  return r;
}

std::vector<std::vector<Vertex>> all_diametrical_paths(const LabeledTree& t) {
  const auto m = metric_summary(t);
  std::vector<std::vector<Vertex>> out;
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex w = u + 1; w < m.n; ++w)
      if (m.distance(u, w) == m.diameter) out.push_back(smaller_orientation(tree_path(t, u, w)));
  std::sort(out.begin(), out.end());
  return out;
}

SpineDecomposition decompose_along(const LabeledTree& t, const std::vector<Vertex>& path) {
  const int n = t.order();
  const auto m = metric_summary(t);
  if (static_cast<int>(path.size()) != m.diameter + 1)
    throw InputError("path length " + std::to_string(path.size() - 1) + " differs from diameter " +
                     std::to_string(m.diameter));
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (!t.adjacent(path[k], path[k + 1])) throw InputError("spine vertices are not consecutive neighbours");

  SpineDecomposition s;
  s.spine = path;
  const int d = m.diameter;
  s.limb_of.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i <= d; ++i) s.limb_of[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = i;
  if (std::count(s.limb_of.begin(), s.limb_of.end(), -1) != n - d - 1)
    throw InputError("spine repeats a vertex");

  s.limb.resize(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    auto& limb = s.limb[static_cast<std::size_t>(i)];
    limb.push_back(path[static_cast<std::size_t>(i)]);
    for (std::size_t head = 0; head < limb.size(); ++head) {
      for (Vertex w : t.neighbours(limb[head])) {
        if (s.limb_of[static_cast<std::size_t>(w)] == -1) {
          s.limb_of[static_cast<std::size_t>(w)] = i;
          limb.push_back(w);
        }
      }
    }
  }

  for (int i = 0; i <= d; ++i) {
    Vertex v = path[static_cast<std::size_t>(i)];
    int leaves = 0;
    for (Vertex w : t.neighbours(v))
      if (t.is_leaf(w)) ++leaves;
    s.leaf_count.push_back(leaves);
    s.is_stem.push_back(leaves >= 1);
    s.is_strong_stem.push_back(leaves >= 2);
  }
  return s;
}

SpineDecomposition spine_decomposition(const LabeledTree& t) {
  // Double sweep: the farthest vertex from any vertex is peripheral.
  auto d0 = bfs_distances(t, 0);
  Vertex a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = bfs_distances(t, a);
  const int diam = *std::max_element(da.begin(), da.end());

  // Ties: scan every peripheral pair and keep the smallest oriented path.
  std::vector<Vertex> best;
  for (Vertex u = 0; u < t.order(); ++u) {
    auto du = bfs_distances(t, u);
    for (Vertex w = u + 1; w < t.order(); ++w) {
      if (du[static_cast<std::size_t>(w)] != diam) continue;
      auto p = smaller_orientation(tree_path(t, u, w));
      if (best.empty() || p < best) best = std::move(p);
    }
  }
  return decompose_along(t, best);
}

bool is_caterpillar(const LabeledTree& t) {
  if (t.order() < 3) return false;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) continue;
    int inner = 0;
    for (Vertex w : t.neighbours(v))
      if (!t.is_leaf(w)) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

}  // namespace bcast
