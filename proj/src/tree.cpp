#include "bcast/tree.hpp"

#include <algorithm>
#include <string>

namespace bcast {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

LabeledTree::LabeledTree(int n, std::span<const Edge> edges) {
  if (n < 2) throw InputError("tree must have at least 2 vertices, got " + std::to_string(n));
  if (static_cast<int>(edges.size()) != n - 1) {
    // An extra edge on a connected vertex set always closes a cycle.
    if (static_cast<int>(edges.size()) > n - 1)
      throw InputError("cycle detected: " + std::to_string(edges.size()) + " edges on " + std::to_string(n) +
                       " vertices (a tree has n-1)");
    throw InputError("disconnected: " + std::to_string(edges.size()) + " edges on " + std::to_string(n) +
                     " vertices (a tree has n-1)");
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("vertex out of range in edge " + edge_str(e));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw InputError("duplicate edge at vertex " + std::to_string(&list - adj_.data()));
  }
  // n-1 distinct edges: connected iff acyclic iff tree.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n)
    throw InputError("disconnected: only " + std::to_string(reached) + " of " + std::to_string(n) +
                     " vertices reachable from vertex 0 (the edge set contains a cycle)");
}

bool LabeledTree::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> LabeledTree::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

LabeledTree build_tree(int n, std::span<const Edge> edges) { return LabeledTree(n, edges); }

LabeledTree make_path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return LabeledTree(n, e);
}

LabeledTree make_star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return LabeledTree(leaves + 1, e);
}

LabeledTree tree_from_parents(std::span<const Vertex> parent) {
  std::vector<Edge> e;
  e.reserve(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i) e.emplace_back(parent[i], static_cast<Vertex>(i + 1));
  return LabeledTree(static_cast<int>(parent.size()) + 1, e);
}

InducedSubtree induced_subtree(const LabeledTree& t, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> relabel(static_cast<std::size_t>(t.order()), -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    Vertex v = sorted[k];
    if (v < 0 || v >= t.order()) throw InputError("subtree vertex " + std::to_string(v) + " out of range");
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  std::vector<Edge> e;
  for (Vertex v : sorted)
    for (Vertex w : t.neighbours(v))
      if (v < w && relabel[static_cast<std::size_t>(w)] >= 0)
        e.emplace_back(relabel[static_cast<std::size_t>(v)], relabel[static_cast<std::size_t>(w)]);
  if (sorted.size() < 2) throw InputError("subtree needs at least 2 vertices");
  if (e.size() + 1 != sorted.size()) throw InputError("vertex set does not induce a connected subtree");
  return {LabeledTree(static_cast<int>(sorted.size()), e), std::move(sorted)};
}

}  // namespace bcast
