#include "bcast/analysis.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace bcast {

namespace {

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

}  // namespace

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

BallIndex::BallIndex(const MetricSummary& m) : n_(m.n), ecc_(m.ecc) {
  if (m.n > kMaxMaskVertices)
    throw CapExceeded("broadcast operations support at most 64 vertices, got " + std::to_string(m.n));
  all_ = n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
  offset_.resize(static_cast<std::size_t>(n_));
  std::size_t total = 0;
  for (Vertex v = 0; v < n_; ++v) {
    offset_[static_cast<std::size_t>(v)] = total;
    total += static_cast<std::size_t>(ecc_[static_cast<std::size_t>(v)] + 1);
  }
  balls_.assign(total, 0);
  for (Vertex v = 0; v < n_; ++v) {
    VertexMask* row = balls_.data() + offset_[static_cast<std::size_t>(v)];
    for (Vertex u = 0; u < n_; ++u) row[m.distance(v, u)] |= bit(u);
    for (int r = 1; r <= ecc_[static_cast<std::size_t>(v)]; ++r) row[r] |= row[r - 1];
  }
}

VertexMask BallIndex::ball(Vertex v, int r) const {
  if (r < 0) return 0;
  r = std::min(r, ecc_[static_cast<std::size_t>(v)]);
  return balls_[offset_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(r)];
}

VertexMask BallIndex::shell(Vertex v, int r) const {
  if (r < 0 || r > ecc_[static_cast<std::size_t>(v)]) return 0;
  return ball(v, r) & ~ball(v, r - 1);
}

VertexMask dominated_mask(const BallIndex& idx, std::span<const int> f) {
  VertexMask m = 0;
  for (Vertex v = 0; v < idx.order(); ++v) m |= idx.coverage(v, f[static_cast<std::size_t>(v)]);
  return m;
}

bool is_dominating(const BallIndex& idx, std::span<const int> f) { return dominated_mask(idx, f) == idx.all(); }

VertexMask private_boundary_mask(const BallIndex& idx, std::span<const int> f, Vertex v) {
  const int fv = f[static_cast<std::size_t>(v)];
  if (fv <= 0) return 0;
  VertexMask lowered = idx.coverage(v, fv - 1);
  for (Vertex w = 0; w < idx.order(); ++w)
    if (w != v) lowered |= idx.coverage(w, f[static_cast<std::size_t>(w)]);
  return idx.coverage(v, fv) & ~lowered;
}

bool is_minimal_dominating(const BallIndex& idx, std::span<const int> f) {
  // Single pass: PB(v) = cov(v) \ (cov(v, f-1) ∪ covered-by-others), and
  // covered-by-others is read off the "covered at least twice" mask.
  VertexMask once = 0, multi = 0;
  for (Vertex v = 0; v < idx.order(); ++v) {
    VertexMask c = idx.coverage(v, f[static_cast<std::size_t>(v)]);
    multi |= once & c;
    once |= c;
  }
  if (once != idx.all()) return false;
  const VertexMask single = once & ~multi;
  for (Vertex v = 0; v < idx.order(); ++v) {
    const int fv = f[static_cast<std::size_t>(v)];
    if (fv == 0) continue;
    if ((idx.coverage(v, fv) & single & ~idx.coverage(v, fv - 1)) == 0) return false;
  }
  return true;
}

const VertexAnalysis& BroadcastAnalysis::at(Vertex v) const {
  for (const auto& e : per_vertex)
    if (e.vertex == v) return e;
  throw std::out_of_range("vertex " + std::to_string(v) + " is not a broadcast vertex");
}

BroadcastAnalysis analyze(const LabeledTree& t, const Broadcast& f) { return analyze(BallIndex(t), f); }

BroadcastAnalysis analyze(const BallIndex& idx, const Broadcast& f) {
  if (f.order() != idx.order())
    throw InputError("broadcast has " + std::to_string(f.order()) + " entries for a tree on " +
                     std::to_string(idx.order()) + " vertices");
  const auto values = f.values();
  BroadcastAnalysis a;
  a.broadcast_vertices = f.broadcast_vertices();
  a.cost = f.cost();
  const VertexMask dom = dominated_mask(idx, values);
  a.dominated = mask_to_vertices(dom);
  a.is_dominating = dom == idx.all();

  bool all_private = true;
  for (Vertex v : a.broadcast_vertices) {
    const int fv = f[v];
    VertexMask others = 0;
    for (Vertex w : a.broadcast_vertices)
      if (w != v) others |= idx.coverage(w, f[w]);
    const VertexMask nb = idx.coverage(v, fv);
    VertexAnalysis e;
    e.vertex = v;
    e.power = fv;
    e.neighbourhood = mask_to_vertices(nb);
    e.boundary = mask_to_vertices(idx.shell(v, fv));
    e.private_neighbourhood = mask_to_vertices(nb & ~others);
    e.private_boundary = mask_to_vertices(private_boundary_mask(idx, values, v));
    all_private = all_private && !e.private_boundary.empty();
    a.per_vertex.push_back(std::move(e));
  }
  a.is_minimal_dominating = a.is_dominating && all_private;
#ifndef NDEBUG
  check_private_boundary_identity(a);
#endif
  return a;
}

void check_private_boundary_identity(const BroadcastAnalysis& a) {
  for (const auto& e : a.per_vertex) {
    std::vector<Vertex> expect;
    if (e.power == 1) {
      expect = e.private_neighbourhood;
    } else {
      std::set_intersection(e.boundary.begin(), e.boundary.end(), e.private_neighbourhood.begin(),
                            e.private_neighbourhood.end(), std::back_inserter(expect));
    }
    if (expect != e.private_boundary)
      throw InvariantViolation("private boundary of vertex " + std::to_string(e.vertex) +
                               " disagrees with the B ∩ PN identity");
  }
}

std::vector<Vertex> hears(const MetricSummary& m, const Broadcast& f, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex v : f.broadcast_vertices())
    if (m.distance(u, v) <= f[v]) out.push_back(v);
  return out;
}

bool edge_hears(const MetricSummary& m, const Broadcast& f, Edge e) {
  for (Vertex v : f.broadcast_vertices())
    if (m.distance(e.first, v) <= f[v] && m.distance(e.second, v) <= f[v]) return true;
  return false;
}

bool overdominates(const MetricSummary& m, const Broadcast& f, Vertex v, Vertex u) {
  return f[v] > 0 && m.distance(u, v) < f[v];
}

bool is_minimal_by_definition(const LabeledTree& t, const Broadcast& f) {
  const BallIndex idx(t);
  std::vector<int> g(f.values().begin(), f.values().end());
  if (!is_dominating(idx, g)) throw DomainError("is_minimal_by_definition requires a dominating broadcast");
  // Domination is monotone in f, so it suffices to try unit decrements.
  for (Vertex v = 0; v < idx.order(); ++v) {
    if (g[static_cast<std::size_t>(v)] == 0) continue;
    --g[static_cast<std::size_t>(v)];
    const bool still = is_dominating(idx, g);
    ++g[static_cast<std::size_t>(v)];
    if (still) return false;
  }
  return true;
}

bool is_minimal_by_definition_exhaustive(const LabeledTree& t, const Broadcast& f) {
  if (t.order() > 8) throw CapExceeded("exhaustive minimality oracle is limited to 8 vertices");
  const BallIndex idx(t);
  const int n = idx.order();
  if (!is_dominating(idx, f.values())) throw DomainError("is_minimal_by_definition requires a dominating broadcast");
  std::vector<int> g(static_cast<std::size_t>(n), 0);
  // Odometer over all g <= f; skip g == f.
  for (;;) {
    if (!std::equal(g.begin(), g.end(), f.values().begin()) && is_dominating(idx, g)) return false;
    int k = 0;
    while (k < n && g[static_cast<std::size_t>(k)] == f[k]) g[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
    ++g[static_cast<std::size_t>(k)];
  }
  return true;
}

RestrictedBroadcast restrict_broadcast(const LabeledTree& t, const Broadcast& f, std::span<const Vertex> sub) {
  auto induced = induced_subtree(t, sub);
  std::vector<int> values;
  for (Vertex v : induced.label_map) values.push_back(f[v]);
  Broadcast g(induced.tree, std::move(values));
  return {std::move(induced.tree), std::move(induced.label_map), std::move(g)};
}

namespace {

std::vector<VertexMask> adjacency_masks(const LabeledTree& t) {
  std::vector<VertexMask> adj(static_cast<std::size_t>(t.order()), 0);
  for (Vertex v = 0; v < t.order(); ++v)
    for (Vertex w : t.neighbours(v)) adj[static_cast<std::size_t>(v)] |= bit(w);
  return adj;
}

// Exact search on the forest induced by `region`: an independent set
// avoiding `forbidden` that dominates the region.
std::optional<VertexMask> forest_independent_dominating(const std::vector<VertexMask>& adj, VertexMask region,
                                                        VertexMask forbidden) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> can_in(static_cast<std::size_t>(n)), can_dom(static_cast<std::size_t>(n)),
      can_need(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(n));

  // can_in: v in X. can_dom: v not in X, dominated by a child in X.
  // can_need: v not in X, no child in X, so its parent must be.
  std::function<void(Vertex)> solve = [&](Vertex v) {
    for (VertexMask c = adj[static_cast<std::size_t>(v)] & region; c; c &= c - 1) {
      Vertex w = std::countr_zero(c);
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      parent[static_cast<std::size_t>(w)] = v;
      kids[static_cast<std::size_t>(v)].push_back(w);
      solve(w);
    }
    bool in = !(forbidden & bit(v)), need = true, dom_all = true, dom_any = false;
    for (Vertex w : kids[static_cast<std::size_t>(v)]) {
      const auto k = static_cast<std::size_t>(w);
      in = in && (can_dom[k] || can_need[k]);
      need = need && can_dom[k];
      dom_all = dom_all && (can_in[k] || can_dom[k]);
      dom_any = dom_any || can_in[k];
    }
    can_in[static_cast<std::size_t>(v)] = in;
    can_need[static_cast<std::size_t>(v)] = need;
    can_dom[static_cast<std::size_t>(v)] = dom_all && dom_any;
  };

  enum State { In, Dom, Need };
  VertexMask chosen = 0;
  std::function<void(Vertex, State)> build = [&](Vertex v, State s) {
    if (s == In) chosen |= bit(v);
    for (Vertex w : kids[static_cast<std::size_t>(v)]) {
      const auto k = static_cast<std::size_t>(w);
      switch (s) {
        case In: build(w, can_dom[k] ? Dom : Need); break;
        case Need: build(w, Dom); break;
        case Dom: build(w, can_in[k] ? In : Dom); break;
      }
    }
  };

  VertexMask done = 0;
  for (VertexMask r = region; r; r &= r - 1) {
    Vertex root = std::countr_zero(r);
    if (done & bit(root)) continue;
    solve(root);
    const auto k = static_cast<std::size_t>(root);
    if (!can_in[k] && !can_dom[k]) return std::nullopt;
    build(root, can_in[k] ? In : Dom);
    // Mark the component.
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      done |= bit(v);
      for (Vertex w : kids[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
  }
  return chosen;
}

}  // namespace

std::optional<VertexMask> maximal_independent_avoiding(const LabeledTree& t, VertexMask region, VertexMask forbidden) {
  if (t.order() > kMaxMaskVertices) throw CapExceeded("independent-set search supports at most 64 vertices");
  const auto adj = adjacency_masks(t);
  VertexMask chosen = 0, blocked = 0;
  for (VertexMask r = region; r; r &= r - 1) {
    Vertex v = std::countr_zero(r);
    if ((forbidden | blocked) & bit(v)) continue;
    chosen |= bit(v);
    blocked |= adj[static_cast<std::size_t>(v)];
  }
  VertexMask covered = chosen;
  for (VertexMask c = chosen; c; c &= c - 1) covered |= adj[static_cast<std::size_t>(std::countr_zero(c))];
  if ((region & ~covered) == 0) return chosen;
  return forest_independent_dominating(adj, region, forbidden);
}

std::optional<Broadcast> try_extend_to_minimal(const LabeledTree& t, const Broadcast& g, std::span<const Vertex> avoid) {
  const auto m = metric_summary(t);
  const BallIndex idx(m);
  const auto values = g.values();
  for (Vertex v : g.broadcast_vertices())
    if (private_boundary_mask(idx, values, v) == 0)
      throw DomainError("extend_to_minimal: broadcast vertex " + std::to_string(v) + " has an empty private boundary");

  const VertexMask undominated = idx.all() & ~dominated_mask(idx, values);
  if (undominated == 0) return g;
  const auto adj = adjacency_masks(t);
  VertexMask forbidden = 0;
  for (Vertex a : avoid) forbidden |= adj[static_cast<std::size_t>(a)];
  auto s = maximal_independent_avoiding(t, undominated, forbidden);
  if (!s) return std::nullopt;
  std::vector<int> f(values.begin(), values.end());
  for (Vertex x : mask_to_vertices(*s)) f[static_cast<std::size_t>(x)] = 1;
  return Broadcast(m, std::move(f));
}

Broadcast extend_to_minimal(const LabeledTree& t, const Broadcast& g, std::span<const Vertex> avoid) {
  auto f = try_extend_to_minimal(t, g, avoid);
  if (!f) throw DomainError("extend_to_minimal: no maximal independent set of the undominated subgraph avoids the neighbours of the given vertices");
  return *f;
}

}  // namespace bcast
