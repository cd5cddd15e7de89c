#include "bcast/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <thread>

#include "bcast/canonical.hpp"
#include "bcast/enumerate.hpp"
#include "bcast/metrics.hpp"
#include "bcast/spine.hpp"

namespace bcast {

bool SweepRecord::operator==(const SweepRecord& o) const {
  auto verdict_eq = [](const std::optional<TheoremVerdict>& a, const std::optional<TheoremVerdict>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->is_diametrical == b->is_diametrical && a->failed == b->failed && a->evidence == b->evidence);
  };
  return canonical_code == o.canonical_code && n == o.n && diameter == o.diameter && radius == o.radius &&
         alpha == o.alpha && gamma == o.gamma && upper_gamma == o.upper_gamma && gamma_b == o.gamma_b &&
         upper_gamma_b == o.upper_gamma_b && is_caterpillar == o.is_caterpillar &&
         verdict_eq(theorem_verdict, o.theorem_verdict) && firing_lemmas == o.firing_lemmas &&
         is_diametrical_brute == o.is_diametrical_brute;
}

SweepRecord compute_record(const LabeledTree& input, const SweepOptions& options,
                           std::vector<std::string>& violations) {
  // Spine-dependent fields are computed on the canonical representative so records are labeling-free.
  const auto code = canonical_code(input);
  const auto t = tree_from_code(code);
  const auto m = metric_summary(t);
  SweepRecord r;
  r.canonical_code = code.code;
  r.n = t.order();
  r.diameter = m.diameter;
  r.radius = m.radius;
  r.alpha = alpha_exact(t, options.limits).value;
  r.gamma = gamma_exact(t, options.limits).value;
  r.upper_gamma = upper_gamma_exact(t, options.limits).value;
  r.gamma_b = gamma_b_exact(t, options.limits).value;
  r.upper_gamma_b = upper_gamma_b_exact(t, options.limits, options.upper_options).value;
  r.is_caterpillar = is_caterpillar(t);
  if (r.is_caterpillar) r.theorem_verdict = theorem_check(t);
  r.is_diametrical_brute = r.upper_gamma_b == r.diameter;
  for (LemmaId id : kAllLemmas) {
    try {
      if (lemma_check(t, id)) r.firing_lemmas.push_back(id);
    } catch (const InvariantViolation& e) {
      r.firing_lemmas.push_back(id);
      violations.push_back(r.canonical_code + ": " + e.what());
    }
  }
  for (auto& v : record_violations(r)) violations.push_back(r.canonical_code + ": " + v);
  return r;
}

std::vector<std::string> record_violations(const SweepRecord& r) {
  BoundChainReport chain{r.n, r.gamma_b, r.gamma, r.radius, r.upper_gamma, r.diameter, r.upper_gamma_b, r.alpha};
  auto out = bound_chain_violations(chain);
  if (r.theorem_verdict && r.theorem_verdict->is_diametrical != r.is_diametrical_brute)
    out.push_back("theorem verdict disagrees with brute force");
  if (!r.firing_lemmas.empty() && r.is_diametrical_brute) out.push_back("a lemma fired on a diametrical tree");
  if (!r.firing_lemmas.empty() && r.theorem_verdict && r.theorem_verdict->is_diametrical)
    out.push_back("a lemma fired on a caterpillar the theorem calls diametrical");
  return out;
}

SweepSummary sweep(const SweepOptions& options, const std::function<void(const SweepRecord&)>& sink) {
  if (options.n_min < 2 || options.n_max < options.n_min) throw InputError("sweep: need 2 <= n_min <= n_max");
  if (options.n_max > options.limits.upper_gamma_b_max)
    throw CapExceeded("sweep: n_max " + std::to_string(options.n_max) + " exceeds solver cap " +
                      std::to_string(options.limits.upper_gamma_b_max));

  std::vector<LabeledTree> trees;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    // K_2 is not a caterpillar under the order >= 3 convention.
    if (options.caterpillars_only && n < 3) continue;
    auto batch = enumerate_trees(n, options.caterpillars_only);
    std::move(batch.begin(), batch.end(), std::back_inserter(trees));
  }

  std::vector<SweepRecord> records(trees.size());
  std::vector<std::vector<std::string>> problems(trees.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < trees.size();) {
      try {
        records[k] = compute_record(trees[k], options, problems[k]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, trees.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  // enumerate_trees is already code-sorted within each order; sort anyway
  // so the emission order never depends on upstream details.
  std::vector<std::size_t> order(records.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(records[a].n, records[a].canonical_code) < std::tie(records[b].n, records[b].canonical_code);
  });

  SweepSummary s;
  for (std::size_t k : order) {
    const auto& r = records[k];
    sink(r);
    ++s.records;
    (r.is_diametrical_brute ? s.diametrical : s.non_diametrical)++;
    s.caterpillars += r.is_caterpillar;
    for (LemmaId id : r.firing_lemmas) ++s.lemma_firings[static_cast<std::size_t>(id) - 1];
    for (auto& p : problems[k]) s.violations.push_back(std::move(p));
  }
  return s;
}

std::vector<SweepRecord> sweep_records(const SweepOptions& options, SweepSummary* summary) {
  std::vector<SweepRecord> out;
  auto s = sweep(options, [&](const SweepRecord& r) { out.push_back(r); });
  if (summary) *summary = std::move(s);
  return out;
}

Json to_json(const SweepRecord& r) {
  Json j;
  j["canonicalCode"] = r.canonical_code;
  j["n"] = r.n;
  j["diameter"] = r.diameter;
  j["radius"] = r.radius;
  j["alpha"] = r.alpha;
  j["gamma"] = r.gamma;
  j["upperGamma"] = r.upper_gamma;
  j["gammaB"] = r.gamma_b;
  j["upperGammaB"] = r.upper_gamma_b;
  j["isCaterpillar"] = r.is_caterpillar;
  j["theoremVerdict"] = r.theorem_verdict ? to_json(*r.theorem_verdict) : Json(nullptr);
  Json lemmas = Json::array();
  for (LemmaId id : r.firing_lemmas) lemmas.push_back(std::string(to_string(id)));
  j["firingLemmas"] = std::move(lemmas);
  j["isDiametricalBrute"] = r.is_diametrical_brute;
  return j;
}

namespace {

Condition parse_condition(const std::string& s) {
  if (s == "none") return Condition::None;
  if (s == "i") return Condition::I;
  if (s == "ii") return Condition::II;
  if (s == "iii") return Condition::III;
  throw InputError("unknown failedCondition '" + s + "'");
}

}  // namespace

SweepRecord record_from_json(const Json& j) {
  try {
    SweepRecord r;
    r.canonical_code = j.at("canonicalCode").get<std::string>();
    r.n = j.at("n").get<int>();
    r.diameter = j.at("diameter").get<int>();
    r.radius = j.at("radius").get<int>();
    r.alpha = j.at("alpha").get<int>();
    r.gamma = j.at("gamma").get<int>();
    r.upper_gamma = j.at("upperGamma").get<int>();
    r.gamma_b = j.at("gammaB").get<int>();
    r.upper_gamma_b = j.at("upperGammaB").get<int>();
    r.is_caterpillar = j.at("isCaterpillar").get<bool>();
    if (const auto& v = j.at("theoremVerdict"); !v.is_null()) {
      TheoremVerdict tv;
      tv.is_diametrical = v.at("isDiametrical").get<bool>();
      tv.failed = parse_condition(v.at("failedCondition").get<std::string>());
      tv.evidence = v.at("evidence").get<std::vector<int>>();
      r.theorem_verdict = tv;
    }
    for (const auto& id : j.at("firingLemmas")) r.firing_lemmas.push_back(parse_lemma_id(id.get<std::string>()));
    r.is_diametrical_brute = j.at("isDiametricalBrute").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed sweep record: ") + e.what());
  }
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["records"] = s.records;
  j["diametrical"] = s.diametrical;
  j["nonDiametrical"] = s.non_diametrical;
  j["caterpillars"] = s.caterpillars;
  Json firings;
  for (LemmaId id : kAllLemmas) firings[std::string(to_string(id))] = s.lemma_firings[static_cast<std::size_t>(id) - 1];
  j["lemmaFirings"] = std::move(firings);
  j["invariantViolations"] = s.violations.size();
  j["violations"] = s.violations;
  return j;
}

std::string csv_header() {
  return "canonicalCode,n,diameter,radius,alpha,gamma,upperGamma,gammaB,upperGammaB,isCaterpillar,theoremVerdict,"
         "firingLemmas,isDiametricalBrute";
}

std::string to_csv(const SweepRecord& r) {
  std::ostringstream os;
  auto b = [](bool x) { return x ? "true" : "false"; };
  os << r.canonical_code << ',' << r.n << ',' << r.diameter << ',' << r.radius << ',' << r.alpha << ',' << r.gamma
     << ',' << r.upper_gamma << ',' << r.gamma_b << ',' << r.upper_gamma_b << ',' << b(r.is_caterpillar) << ',';
  if (r.theorem_verdict) {
    os << b(r.theorem_verdict->is_diametrical);
    if (!r.theorem_verdict->is_diametrical) os << ':' << to_string(r.theorem_verdict->failed);
  }
  os << ',';
  for (std::size_t k = 0; k < r.firing_lemmas.size(); ++k) os << (k ? ";" : "") << to_string(r.firing_lemmas[k]);
  os << ',' << b(r.is_diametrical_brute);
  return os.str();
}

std::string summary_table(const SweepSummary& s) {
  std::ostringstream os;
  auto row = [&](const std::string& k, auto v) {
    os << k << std::string(k.size() < 24 ? 24 - k.size() : 1, ' ') << v << '\n';
  };
  row("records", s.records);
  row("diametrical", s.diametrical);
  row("non-diametrical", s.non_diametrical);
  row("caterpillars", s.caterpillars);
  for (LemmaId id : kAllLemmas)
    row("fired " + std::string(to_string(id)), s.lemma_firings[static_cast<std::size_t>(id) - 1]);
  row("invariant violations", s.violations.size());
  return os.str();
}

ProbeReport probe_isometric_monotonicity(int n_max, const SolverLimits& limits) {
  if (n_max < 2) throw InputError("probe: n_max must be at least 2");
  if (n_max > 9) throw CapExceeded("probe: n_max " + std::to_string(n_max) + " exceeds cap 9");

  std::map<std::string, int> memo;
  auto value = [&](const LabeledTree& t) {
    auto code = canonical_code(t).code;
    auto it = memo.find(code);
    if (it == memo.end()) it = memo.emplace(code, upper_gamma_b_exact(t, limits).value).first;
    return std::pair{code, it->second};
  };

  ProbeReport report;
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& enumerated : enumerate_trees(n)) {
      // Rebuild from the code so reported vertex labels are reproducible.
      const auto host = tree_from_code(canonical_code(enumerated));
      const auto [host_code, host_value] = value(host);
      ++report.trees;
      for_each_subtree(host, [&](const Subtree& sub) {
        ++report.pairs;
        const auto [sub_code, sub_value] = value(sub.tree);
        if (sub_value > host_value)
          report.violations.push_back({host_code, sub_code, sub.label_map, host_value, sub_value});
      });
    }
  }
  return report;
}

Json to_json(const ProbeReport& p) {
  Json j;
  j["nMax"] = p.n_max;
  j["trees"] = p.trees;
  j["pairs"] = p.pairs;
  Json v = Json::array();
  for (const auto& x : p.violations) {
    Json e;
    e["hostCode"] = x.host_code;
    e["subtreeCode"] = x.subtree_code;
    e["subtreeVertices"] = x.subtree_vertices;
    e["hostUpperGammaB"] = x.host_value;
    e["subtreeUpperGammaB"] = x.subtree_value;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

}  // namespace bcast
