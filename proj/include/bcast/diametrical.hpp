#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/solvers.hpp"
#include "bcast/spine.hpp"
#include "bcast/tree.hpp"

namespace bcast {

enum class Condition { None, I, II, III };

std::string_view to_string(Condition c);

/// Outcome of the three-condition test for diametrical caterpillars.
///
/// evidence holds spine indices: {i} for (i), {i, i+1} for (ii), {i, j}
/// for (iii); empty when every condition holds.
struct TheoremVerdict {
  bool is_diametrical = true;
  Condition failed = Condition::None;
  std::vector<int> evidence;
};

/// Evaluates, on the deterministic spine v_0..v_d of a caterpillar:
///   (i)   leaf_count[i] <= 2 for 1 <= i <= d-1,
///   (ii)  min{deg v_i, deg v_{i+1}} = 2 for 1 <= i <= d-2,
///   (iii) any two strong stems v_i, v_j (i < j) are separated by some k,
///         i < k < j, with deg v_k = deg v_{k+1} = 2.
/// Reports the first failure in that order, smallest indices first.
/// Throws NotCaterpillar.
TheoremVerdict theorem_check(const LabeledTree& t);
TheoremVerdict theorem_check(const LabeledTree& t, const SpineDecomposition& spine);

/// Re-checks a failed verdict's evidence against the raw degrees and leaf
/// counts. True when the evidence really witnesses the named condition.
bool evidence_holds(const LabeledTree& t, const SpineDecomposition& spine, const TheoremVerdict& v);

enum class LemmaId { L1 = 1, L2, L3, L4, L5 };

std::string_view to_string(LemmaId id);
/// Accepts "L1".."L5" (case-insensitive). Throws InputError.
LemmaId parse_lemma_id(std::string_view s);
inline constexpr LemmaId kAllLemmas[] = {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4, LemmaId::L5};

/// The instantiated hypothesis of a lemma: spine indices plus the vertex
/// sets the construction starts from.
struct HypothesisEvidence {
  std::string description;
  std::vector<int> indices;
  std::vector<Vertex> vertices;
};

/// A minimal dominating broadcast of cost greater than the diameter,
/// produced by a lemma's construction.
///
/// `constructed_by` differs from `lemma` when the construction hands off to
/// an earlier lemma whose hypothesis also holds.
struct WitnessCertificate {
  LemmaId lemma = LemmaId::L1;
  LemmaId constructed_by = LemmaId::L1;
  HypothesisEvidence evidence;
  Broadcast witness = Broadcast::zero(0);
  int diameter = 0;
};

/// Whether lemma `id`'s hypothesis holds for t on its deterministic spine.
std::optional<HypothesisEvidence> lemma_hypothesis(const LabeledTree& t, LemmaId id);

/// Lemmas whose hypothesis holds.
std::vector<LemmaId> firing_lemmas(const LabeledTree& t);

/// Runs lemma `id`: nullopt when the hypothesis does not hold, otherwise a
/// certificate re-validated through analyze(). A firing hypothesis whose
/// witness fails re-validation throws InvariantViolation.
std::optional<WitnessCertificate> lemma_check(const LabeledTree& t, LemmaId id);

/// Independent re-check: minimal dominating (via analyze) and cost > diam.
bool certificate_valid(const LabeledTree& t, const WitnessCertificate& c);

enum class DiametricalMode { Auto, Theorem, BruteForce, CrossCheck };

DiametricalMode parse_diametrical_mode(std::string_view s);
std::string_view to_string(DiametricalMode m);

struct DiametricalDecision {
  bool is_diametrical = false;
  std::string provenance;  // "theorem", "bruteforce" or "crosscheck"
  int diameter = 0;
  std::optional<TheoremVerdict> verdict;
  std::optional<int> upper_gamma_b;
};

/// Gamma_b(t) == diam(t)?
///   theorem:    caterpillars only (NotCaterpillar otherwise)
///   bruteforce: exact Gamma_b against the diameter
///   crosscheck: both, InvariantViolation on disagreement (caterpillars)
///   auto:       theorem for caterpillars, bruteforce otherwise
DiametricalDecision is_diametrical(const LabeledTree& t, DiametricalMode mode = DiametricalMode::Auto,
                                   const SolverLimits& limits = {});

}  // namespace bcast
