#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/metrics.hpp"
#include "bcast/tree.hpp"

namespace bcast {

using VertexMask = std::uint64_t;
inline constexpr int kMaxMaskVertices = 64;

std::vector<Vertex> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const Vertex> vs);

/// Precomputed distance balls and shells as vertex bitmasks. Requires
/// n <= 64 (throws CapExceeded otherwise).
class BallIndex {
 public:
  explicit BallIndex(const MetricSummary& m);
  explicit BallIndex(const LabeledTree& t) : BallIndex(metric_summary(t)) {}

  int order() const { return n_; }
  int eccentricity(Vertex v) const { return ecc_[static_cast<std::size_t>(v)]; }
  VertexMask all() const { return all_; }

  /// Vertices within distance r of v (r >= 0, clamped to ecc(v)).
  VertexMask ball(Vertex v, int r) const;
  /// Vertices at distance exactly r.
  VertexMask shell(Vertex v, int r) const;
  /// What v hears-covers when broadcasting with the given power; empty for 0.
  VertexMask coverage(Vertex v, int power) const { return power > 0 ? ball(v, power) : 0; }
  VertexMask neighbourhood(Vertex v) const { return ball(v, 1); }

 private:
  int n_ = 0;
  VertexMask all_ = 0;
  std::vector<int> ecc_;
  std::vector<std::size_t> offset_;
  std::vector<VertexMask> balls_;
};

/// Union of the f-neighbourhoods.
VertexMask dominated_mask(const BallIndex& idx, std::span<const int> f);
bool is_dominating(const BallIndex& idx, std::span<const int> f);
/// Proposition-1 test: dominating and every broadcast vertex has a
/// nonempty private boundary.
bool is_minimal_dominating(const BallIndex& idx, std::span<const int> f);
/// PB_f(v) by its definition: the part of N_f[v] left undominated when
/// f(v) drops by one.
VertexMask private_boundary_mask(const BallIndex& idx, std::span<const int> f, Vertex v);

struct VertexAnalysis {
  Vertex vertex = 0;
  int power = 0;
  std::vector<Vertex> neighbourhood;          // N_f[v]
  std::vector<Vertex> boundary;               // B_f(v)
  std::vector<Vertex> private_neighbourhood;  // PN_f(v)
  std::vector<Vertex> private_boundary;       // PB_f(v)
};

struct BroadcastAnalysis {
  std::vector<Vertex> broadcast_vertices;
  int cost = 0;
  std::vector<VertexAnalysis> per_vertex;  // one entry per broadcast vertex, ascending
  std::vector<Vertex> dominated;
  bool is_dominating = false;
  bool is_minimal_dominating = false;

  /// Throws std::out_of_range if v is not a broadcast vertex.
  const VertexAnalysis& at(Vertex v) const;
};

/// Derived sets and verdicts of f on t. PB is computed from its
/// definition; debug builds also check it against B ∩ PN / PN.
BroadcastAnalysis analyze(const LabeledTree& t, const Broadcast& f);
BroadcastAnalysis analyze(const BallIndex& idx, const Broadcast& f);

/// Throws InvariantViolation if a PB entry disagrees with the B ∩ PN (f >= 2)
/// or PN (f = 1) identity.
void check_private_boundary_identity(const BroadcastAnalysis& a);

/// Broadcast vertices that u hears.
std::vector<Vertex> hears(const MetricSummary& m, const Broadcast& f, Vertex u);
/// Both ends hear f from a common broadcast vertex.
bool edge_hears(const MetricSummary& m, const Broadcast& f, Edge e);
/// d(u, v) < f(v) for a broadcast vertex v.
bool overdominates(const MetricSummary& m, const Broadcast& f, Vertex v, Vertex u);

/// Minimality straight from the definition: f dominating and no single
/// unit decrement still dominates. Throws DomainError if f is not
/// dominating.
bool is_minimal_by_definition(const LabeledTree& t, const Broadcast& f);
/// Second-level oracle: scans every f' < f. Requires n <= 8.
bool is_minimal_by_definition_exhaustive(const LabeledTree& t, const Broadcast& f);

struct RestrictedBroadcast {
  LabeledTree tree;
  std::vector<Vertex> label_map;  // subtree label -> host label
  Broadcast broadcast;
};

/// f restricted to the subtree induced by `sub`. Throws InputError if
/// `sub` is not connected or a value exceeds its eccentricity in the
/// subtree.
RestrictedBroadcast restrict_broadcast(const LabeledTree& t, const Broadcast& f, std::span<const Vertex> sub);

/// An independent set X inside `region` with X ∩ forbidden = ∅ that
/// dominates every vertex of `region` using only edges inside `region`
/// (a maximal independent set of the induced forest). Greedy by smallest
/// index first; falls back to an exact forest DP when greedy gets stuck.
std::optional<VertexMask> maximal_independent_avoiding(const LabeledTree& t, VertexMask region,
                                                       VertexMask forbidden);

/// Completes g to a dominating broadcast by adding power 1 on a maximal
/// independent set S of the g-undominated subgraph, where S contains no
/// neighbour of any vertex in `avoid`. Returns nullopt when no such S
/// exists. Throws DomainError if some broadcast vertex of g already has an
/// empty private boundary.
std::optional<Broadcast> try_extend_to_minimal(const LabeledTree& t, const Broadcast& g,
                                               std::span<const Vertex> avoid);
/// As above, throwing DomainError when no admissible S exists.
Broadcast extend_to_minimal(const LabeledTree& t, const Broadcast& g, std::span<const Vertex> avoid);

}  // namespace bcast
