#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcast/diametrical.hpp"
#include "bcast/serialize.hpp"
#include "bcast/solvers.hpp"
#include "bcast/tree.hpp"

namespace bcast {

/// Every parameter of one isomorphism class.
struct SweepRecord {
  std::string canonical_code;
  int n = 0;
  int diameter = 0;
  int radius = 0;
  int alpha = 0;
  int gamma = 0;
  int upper_gamma = 0;
  int gamma_b = 0;
  int upper_gamma_b = 0;
  bool is_caterpillar = false;
  std::optional<TheoremVerdict> theorem_verdict;  // caterpillars only
  std::vector<LemmaId> firing_lemmas;
  bool is_diametrical_brute = false;

  bool operator==(const SweepRecord& o) const;
};

struct SweepOptions {
  int n_max = 10;
  int n_min = 2;
  bool caterpillars_only = false;
  int threads = 0;  // 0: hardware concurrency
  SolverLimits limits;
  UpperSearchOptions upper_options;
};

struct SweepSummary {
  int records = 0;
  int diametrical = 0;
  int non_diametrical = 0;
  int caterpillars = 0;
  std::array<int, 5> lemma_firings{};  // indexed by LemmaId - 1
  std::vector<std::string> violations;
};

/// Computes one record. Lemma constructions run in full; a construction
/// that fails re-validation lands in `violations` instead of throwing.
SweepRecord compute_record(const LabeledTree& t, const SweepOptions& options, std::vector<std::string>& violations);

/// Inequalities and cross-field agreements that must hold in every record.
std::vector<std::string> record_violations(const SweepRecord& r);

/// Records for every tree with n_min <= n <= n_max, computed on worker
/// threads and handed to `sink` in (n, canonical code) order.
SweepSummary sweep(const SweepOptions& options, const std::function<void(const SweepRecord&)>& sink);
std::vector<SweepRecord> sweep_records(const SweepOptions& options, SweepSummary* summary = nullptr);

Json to_json(const SweepRecord& r);
SweepRecord record_from_json(const Json& j);
Json to_json(const SweepSummary& s);

std::string csv_header();
std::string to_csv(const SweepRecord& r);
std::string summary_table(const SweepSummary& s);

struct MonotonicityViolation {
  std::string host_code;
  std::string subtree_code;
  std::vector<Vertex> subtree_vertices;  // host labels of tree_from_code(host_code)
  int host_value = 0;
  int subtree_value = 0;
};

struct ProbeReport {
  int n_max = 0;
  int trees = 0;
  std::int64_t pairs = 0;
  std::vector<MonotonicityViolation> violations;
};

/// For each tree T with 2 <= n <= n_max and each connected induced subtree
/// T' (every such subtree of a tree is isometric), records the pairs with
/// Gamma_b(T') > Gamma_b(T). n_max <= 9.
ProbeReport probe_isometric_monotonicity(int n_max, const SolverLimits& limits = {});

Json to_json(const ProbeReport& p);

}  // namespace bcast
