#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/tree.hpp"

namespace bcast {

/// Size limits for the exhaustive solvers. Configuration, not constants.
struct SolverLimits {
  int gamma_b_max = 14;
  int upper_gamma_b_max = 12;
  int set_max = 16;
  int reference_max = 8;
};

struct UpperSearchOptions {
  /// Prune partial assignments whose cost exceeds |E| = n-1 and cap the
  /// completion bound there. Disable to measure the edge bound instead of
  /// assuming it.
  bool edge_bound_prune = true;
};

/// Optimum value with a re-checkable witness: a broadcast for the
/// broadcast parameters, a vertex set for alpha / gamma / Gamma.
struct SolverResult {
  int value = 0;
  std::optional<Broadcast> broadcast;
  std::vector<Vertex> vertex_set;
  std::int64_t nodes_explored = 0;
};

/// Minimum cost of a dominating broadcast, by iterative deepening on the
/// total cost c = 1..rad.
SolverResult gamma_b_exact(const LabeledTree& t, const SolverLimits& limits = {});

/// Maximum cost of a minimal dominating broadcast.
///
/// Depth-first assignment over vertices in decreasing eccentricity, with
/// three admissible prunes: running cost <= n-1, every assigned broadcast
/// vertex keeps a nonempty private boundary (adding broadcasts only shrinks
/// it), and the optimistic completion bound must beat the incumbent.
SolverResult upper_gamma_b_exact(const LabeledTree& t, const SolverLimits& limits = {},
                                 const UpperSearchOptions& options = {});

/// Unpruned reference: scans every broadcast f <= ecc.
SolverResult upper_gamma_b_reference(const LabeledTree& t, const SolverLimits& limits = {});

SolverResult alpha_exact(const LabeledTree& t, const SolverLimits& limits = {});
SolverResult gamma_exact(const LabeledTree& t, const SolverLimits& limits = {});
SolverResult upper_gamma_exact(const LabeledTree& t, const SolverLimits& limits = {});

struct BoundChainReport {
  int order = 0;
  int gamma_b = 0;
  int gamma = 0;
  int radius = 0;
  int upper_gamma = 0;
  int diameter = 0;
  int upper_gamma_b = 0;
  int alpha = 0;
};

/// Lists every failed inequality of
///   gamma_b <= min{gamma, rad} <= max{Gamma, diam} <= Gamma_b,
///   Gamma_b >= Gamma >= alpha,  Gamma_b <= n-1.
std::vector<std::string> bound_chain_violations(const BoundChainReport& r);

/// Computes all parameters and checks the chain. Throws InvariantViolation
/// naming the canonical code of t if any inequality fails.
BoundChainReport verify_bound_chain(const LabeledTree& t, const SolverLimits& limits = {});

}  // namespace bcast
