#include "bcast/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "bcast/analysis.hpp"
#include "bcast/canonical.hpp"

namespace bcast {

namespace {

void require_cap(const LabeledTree& t, int cap, const char* what) {
  if (t.order() > cap)
    throw CapExceeded(std::string(what) + ": tree order " + std::to_string(t.order()) + " exceeds solver cap " +
                      std::to_string(cap));
}

std::vector<Vertex> order_by_eccentricity(const MetricSummary& m, bool descending) {
  std::vector<Vertex> order(static_cast<std::size_t>(m.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return descending ? m.eccentricity(a) > m.eccentricity(b) : m.eccentricity(a) < m.eccentricity(b);
  });
  return order;
}

// Depth-first search for gamma_b at a fixed budget.
class DominationSearch {
 public:
  DominationSearch(const BallIndex& idx, std::vector<Vertex> order)
      : idx_(idx), order_(std::move(order)), f_(static_cast<std::size_t>(idx.order()), 0) {}

  bool run(int budget) { return visit(0, budget, 0); }
  const std::vector<int>& assignment() const { return f_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  bool visit(std::size_t k, int budget, VertexMask covered) {
    ++nodes_;
    if (covered == idx_.all()) return true;
    if (k == order_.size() || budget == 0) return false;
    VertexMask reach = covered;
    for (std::size_t j = k; j < order_.size(); ++j) reach |= idx_.ball(order_[j], budget);
    if (reach != idx_.all()) return false;

    const Vertex u = order_[k];
    const int top = std::min(budget, idx_.eccentricity(u));
    for (int p = top; p >= 0; --p) {
      f_[static_cast<std::size_t>(u)] = p;
      if (visit(k + 1, budget - p, covered | idx_.coverage(u, p))) return true;
    }
    f_[static_cast<std::size_t>(u)] = 0;
    return false;
  }

  const BallIndex& idx_;
  std::vector<Vertex> order_;
  std::vector<int> f_;
  std::int64_t nodes_ = 0;
};

// Depth-first search for Gamma_b.
class UpperSearch {
 public:
  UpperSearch(const BallIndex& idx, std::vector<Vertex> order, bool edge_bound)
      : idx_(idx),
        order_(std::move(order)),
        cost_cap_(edge_bound ? idx.order() - 1 : std::numeric_limits<int>::max() / 4),
        f_(static_cast<std::size_t>(idx.order()), 0),
        suffix_ecc_(order_.size() + 1, 0) {
    for (std::size_t j = order_.size(); j-- > 0;) suffix_ecc_[j] = suffix_ecc_[j + 1] + idx_.eccentricity(order_[j]);
  }

  void run() { visit(0, 0, 0, 0); }
  int best() const { return best_; }
  const std::vector<int>& best_assignment() const { return best_f_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  void visit(std::size_t k, int cost, VertexMask once, VertexMask multi) {
    ++nodes_;
    if (k == order_.size()) {
      if (once == idx_.all() && cost > best_) {
        best_ = cost;
        best_f_ = f_;
      }
      return;
    }
    const long optimistic = std::min<long>(static_cast<long>(cost) + suffix_ecc_[k], cost_cap_);
    if (optimistic <= best_) return;

    const Vertex u = order_[k];
    const int top = std::min(idx_.eccentricity(u), cost_cap_ - cost);
    positives_.push_back(u);
    for (int p = 1; p <= top; ++p) {
      const VertexMask c = idx_.coverage(u, p);
      const VertexMask m2 = multi | (once & c);
      const VertexMask o2 = once | c;
      f_[static_cast<std::size_t>(u)] = p;
      // Raising p only grows u's ball, so once another vertex loses its
      // private boundary no larger p can restore it.
      if (!others_alive(u, o2, m2)) break;
      if (own_alive(u, p, o2, m2)) visit(k + 1, cost + p, o2, m2);
    }
    f_[static_cast<std::size_t>(u)] = 0;
    positives_.pop_back();
    visit(k + 1, cost, once, multi);
  }

  bool own_alive(Vertex u, int p, VertexMask once, VertexMask multi) const {
    return (idx_.coverage(u, p) & once & ~multi & ~idx_.coverage(u, p - 1)) != 0;
  }

  bool others_alive(Vertex u, VertexMask once, VertexMask multi) const {
    const VertexMask single = once & ~multi;
    for (Vertex w : positives_) {
      if (w == u) continue;
      const int p = f_[static_cast<std::size_t>(w)];
      if ((idx_.coverage(w, p) & single & ~idx_.coverage(w, p - 1)) == 0) return false;
    }
    return true;
  }

  const BallIndex& idx_;
  std::vector<Vertex> order_;
  int cost_cap_;
  std::vector<int> f_;
  std::vector<int> best_f_;
  std::vector<long> suffix_ecc_;
  std::vector<Vertex> positives_;
  int best_ = -1;
  std::int64_t nodes_ = 0;
};

std::vector<VertexMask> closed_neighbourhoods(const LabeledTree& t) {
  std::vector<VertexMask> out(static_cast<std::size_t>(t.order()));
  for (Vertex v = 0; v < t.order(); ++v) {
    VertexMask m = VertexMask{1} << v;
    for (Vertex w : t.neighbours(v)) m |= VertexMask{1} << w;
    out[static_cast<std::size_t>(v)] = m;
  }
  return out;
}

VertexMask set_dominated(const std::vector<VertexMask>& closed, VertexMask s) {
  VertexMask d = 0;
  for (; s; s &= s - 1) d |= closed[static_cast<std::size_t>(std::countr_zero(s))];
  return d;
}

SolverResult vertex_set_result(VertexMask s, std::int64_t nodes) {
  SolverResult r;
  r.value = std::popcount(s);
  r.vertex_set = mask_to_vertices(s);
  r.nodes_explored = nodes;
  return r;
}

}  // namespace

SolverResult gamma_b_exact(const LabeledTree& t, const SolverLimits& limits) {
  require_cap(t, limits.gamma_b_max, "gamma_b_exact");
  const auto m = metric_summary(t);
  const BallIndex idx(m);
  DominationSearch search(idx, order_by_eccentricity(m, false));
  for (int c = 1; c <= m.radius; ++c) {
    if (search.run(c)) {
      Broadcast f(m, search.assignment());
      SolverResult r;
      r.value = f.cost();
      r.broadcast = std::move(f);
      r.nodes_explored = search.nodes();
      return r;
    }
  }
  throw InvariantViolation("gamma_b_exact: no dominating broadcast of cost <= rad = " + std::to_string(m.radius));
}

SolverResult upper_gamma_b_exact(const LabeledTree& t, const SolverLimits& limits, const UpperSearchOptions& options) {
  require_cap(t, limits.upper_gamma_b_max, "upper_gamma_b_exact");
  const auto m = metric_summary(t);
  const BallIndex idx(m);
  UpperSearch search(idx, order_by_eccentricity(m, true), options.edge_bound_prune);
  search.run();
  if (search.best() < 0) throw InvariantViolation("upper_gamma_b_exact: no minimal dominating broadcast found");
  SolverResult r;
  r.value = search.best();
  r.broadcast = Broadcast(m, search.best_assignment());
  r.nodes_explored = search.nodes();
  return r;
}

SolverResult upper_gamma_b_reference(const LabeledTree& t, const SolverLimits& limits) {
  require_cap(t, limits.reference_max, "upper_gamma_b_reference");
  const auto m = metric_summary(t);
  const BallIndex idx(m);
  const int n = m.n;
  std::vector<int> f(static_cast<std::size_t>(n), 0), best_f;
  int best = -1;
  std::int64_t nodes = 0;
  for (;;) {
    ++nodes;
    if (is_minimal_dominating(idx, f)) {
      int c = std::accumulate(f.begin(), f.end(), 0);
      if (c > best) {
        best = c;
        best_f = f;
      }
    }
    int k = 0;
    while (k < n && f[static_cast<std::size_t>(k)] == m.eccentricity(k)) f[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
    ++f[static_cast<std::size_t>(k)];
  }
  SolverResult r;
  r.value = best;
  r.broadcast = Broadcast(m, best_f);
  r.nodes_explored = nodes;
  return r;
}

SolverResult alpha_exact(const LabeledTree& t, const SolverLimits& limits) {
  require_cap(t, std::min(limits.set_max, 30), "alpha_exact");
  const int n = t.order();
  const auto closed = closed_neighbourhoods(t);
  VertexMask best = 0;
  std::int64_t nodes = 0;
  for (VertexMask s = 1; s < (VertexMask{1} << n); ++s) {
    ++nodes;
    if (std::popcount(s) <= std::popcount(best)) continue;
    bool independent = true;
    for (VertexMask r = s; r && independent; r &= r - 1) {
      Vertex v = std::countr_zero(r);
      independent = (closed[static_cast<std::size_t>(v)] & s) == (VertexMask{1} << v);
    }
    if (independent) best = s;
  }
  return vertex_set_result(best, nodes);
}

SolverResult gamma_exact(const LabeledTree& t, const SolverLimits& limits) {
  require_cap(t, std::min(limits.set_max, 30), "gamma_exact");
  const int n = t.order();
  const VertexMask all = (VertexMask{1} << n) - 1;
  const auto closed = closed_neighbourhoods(t);
  VertexMask best = all;
  std::int64_t nodes = 0;
  for (VertexMask s = 1; s <= all; ++s) {
    ++nodes;
    if (std::popcount(s) >= std::popcount(best)) continue;
    if (set_dominated(closed, s) == all) best = s;
  }
  return vertex_set_result(best, nodes);
}

SolverResult upper_gamma_exact(const LabeledTree& t, const SolverLimits& limits) {
  require_cap(t, std::min(limits.set_max, 30), "upper_gamma_exact");
  const int n = t.order();
  const VertexMask all = (VertexMask{1} << n) - 1;
  const auto closed = closed_neighbourhoods(t);
  VertexMask best = 0;
  std::int64_t nodes = 0;
  for (VertexMask s = 1; s <= all; ++s) {
    ++nodes;
    if (std::popcount(s) <= std::popcount(best)) continue;
    if (set_dominated(closed, s) != all) continue;
    // Minimal by inclusion: no single removal still dominates.
    bool minimal = true;
    for (VertexMask r = s; r && minimal; r &= r - 1) {
      VertexMask without = s & ~(r & (~r + 1));
      minimal = set_dominated(closed, without) != all;
    }
    if (minimal) best = s;
  }
  return vertex_set_result(best, nodes);
}

std::vector<std::string> bound_chain_violations(const BoundChainReport& r) {
  std::vector<std::string> v;
  const int lo = std::min(r.gamma, r.radius);
  const int hi = std::max(r.upper_gamma, r.diameter);
  if (r.gamma_b > lo) v.push_back("gamma_b > min{gamma, rad}");
  if (lo > hi) v.push_back("min{gamma, rad} > max{Gamma, diam}");
  if (hi > r.upper_gamma_b) v.push_back("max{Gamma, diam} > Gamma_b");
  if (r.upper_gamma > r.upper_gamma_b) v.push_back("Gamma > Gamma_b");
  if (r.alpha > r.upper_gamma) v.push_back("alpha > Gamma");
  if (r.upper_gamma_b > r.order - 1) v.push_back("Gamma_b > n-1");
  return v;
}

BoundChainReport verify_bound_chain(const LabeledTree& t, const SolverLimits& limits) {
  const auto m = metric_summary(t);
  BoundChainReport r;
  r.order = t.order();
  r.radius = m.radius;
  r.diameter = m.diameter;
  r.gamma_b = gamma_b_exact(t, limits).value;
  r.gamma = gamma_exact(t, limits).value;
  r.upper_gamma = upper_gamma_exact(t, limits).value;
  r.upper_gamma_b = upper_gamma_b_exact(t, limits).value;
  r.alpha = alpha_exact(t, limits).value;
  auto bad = bound_chain_violations(r);
  if (!bad.empty()) {
    std::string msg = "bound chain violated on tree " + canonical_code(t).code + ":";
    for (const auto& b : bad) msg += " [" + b + "]";
    throw InvariantViolation(msg);
  }
  return r;
}

}  // namespace bcast
