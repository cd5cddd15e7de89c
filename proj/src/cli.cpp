#include "bcast/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bcast/analysis.hpp"
#include "bcast/canonical.hpp"
#include "bcast/diametrical.hpp"
#include "bcast/enumerate.hpp"
#include "bcast/harness.hpp"
#include "bcast/io.hpp"
#include "bcast/metrics.hpp"
#include "bcast/serialize.hpp"
#include "bcast/solvers.hpp"
#include "bcast/spine.hpp"

namespace bcast {

namespace {

struct Config {
  std::string input;
  std::string format = "edgelist";
  bool json = false;
  SolverLimits limits;

  std::string broadcast;
  bool no_edge_prune = false;
  std::string mode;
  std::string lemma = "all";
  int max_n = 0;
  int n = 0;
  bool caterpillars_only = false;
  std::string emit = "graph6";
  std::string out_path;
  std::string csv_path;
  int threads = 0;
};

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? sep : "") + std::to_string(xs[k]);
  return s;
}

std::string join_bools(const std::vector<bool>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? " " : "") + std::string(xs[k] ? "1" : "0");
  return s;
}

std::string set_text(const std::vector<Vertex>& xs) { return "{" + join(xs, ",") + "}"; }

class Runner {
 public:
  Runner(const Config& c, std::istream& in, std::ostream& out) : c_(c), in_(in), out_(out) {}

  LabeledTree tree() const {
    std::string text;
    if (c_.input == "-")
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    else
      text = read_text_file(c_.input);
    return parse_tree(text, c_.format == "graph6" ? TreeFormat::Graph6 : TreeFormat::EdgeList);
  }

  void emit(const Json& j) const { out_ << j.dump(2) << '\n'; }

  int metrics() const {
    const auto t = tree();
    const auto m = metric_summary(t);
    const auto s = spine_decomposition(t);
    const bool cat = is_caterpillar(t);
    if (c_.json) {
      Json j;
      j["metrics"] = to_json(m);
      j["spine"] = to_json(s);
      j["isCaterpillar"] = cat;
      j["canonicalCode"] = canonical_code(t).code;
      emit(j);
      return kExitOk;
    }
    out_ << "n: " << m.n << "\nradius: " << m.radius << "\ndiameter: " << m.diameter
         << "\neccentricity: " << join(m.ecc) << "\nspine: " << join(s.spine) << "\nleaf counts: " << join(s.leaf_count)
         << "\nstrong stems: " << join_bools(s.is_strong_stem) << "\ncaterpillar: " << (cat ? "yes" : "no")
         << "\ncanonical code: " << canonical_code(t).code << '\n';
    return kExitOk;
  }

  int check_broadcast() const {
    const auto t = tree();
    const auto m = metric_summary(t);
    const auto f = parse_broadcast(c_.broadcast, m);
    const auto a = analyze(BallIndex(m), f);
    if (c_.json) {
      emit(to_json(a));
      return kExitOk;
    }
    out_ << "broadcast: " << format_broadcast(f) << "\ncost: " << a.cost
         << "\ndominating: " << (a.is_dominating ? "yes" : "no")
         << "\nminimal dominating: " << (a.is_minimal_dominating ? "yes" : "no") << '\n';
    for (const auto& v : a.per_vertex)
      out_ << "v" << v.vertex << " power " << v.power << ": N=" << set_text(v.neighbourhood)
           << " B=" << set_text(v.boundary) << " PN=" << set_text(v.private_neighbourhood)
           << " PB=" << set_text(v.private_boundary) << '\n';
    return kExitOk;
  }

  int solver(bool upper) const {
    const auto t = tree();
    const auto r = upper ? upper_gamma_b_exact(t, c_.limits, UpperSearchOptions{!c_.no_edge_prune})
                         : gamma_b_exact(t, c_.limits);
    if (c_.json) {
      emit(to_json(r));
      return kExitOk;
    }
    out_ << (upper ? "upper_gamma_b" : "gamma_b") << ": " << r.value << "\nwitness: " << format_broadcast(*r.broadcast)
         << "\nnodes explored: " << r.nodes_explored << '\n';
    return kExitOk;
  }

  int diametrical() const {
    const auto t = tree();
    DiametricalMode mode;
    if (c_.mode.empty())
      mode = t.order() <= c_.limits.upper_gamma_b_max ? DiametricalMode::CrossCheck : DiametricalMode::Theorem;
    else
      mode = parse_diametrical_mode(c_.mode);
    const auto d = is_diametrical(t, mode, c_.limits);
    if (c_.json) {
      emit(to_json(d));
      return kExitOk;
    }
    out_ << "diametrical: " << (d.is_diametrical ? "true" : "false") << "\nprovenance: " << d.provenance
         << "\ndiameter: " << d.diameter << '\n';
    if (d.upper_gamma_b) out_ << "upper_gamma_b: " << *d.upper_gamma_b << '\n';
    if (d.verdict) {
      out_ << "failed condition: " << to_string(d.verdict->failed) << '\n';
      if (!d.verdict->evidence.empty()) out_ << "evidence: " << join(d.verdict->evidence) << '\n';
    }
    return kExitOk;
  }

  int witness() const {
    const auto t = tree();
    std::vector<LemmaId> ids;
    if (c_.lemma == "all")
      ids.assign(std::begin(kAllLemmas), std::end(kAllLemmas));
    else
      ids.push_back(parse_lemma_id(c_.lemma));
    Json arr = Json::array();
    for (LemmaId id : ids) {
      const auto cert = lemma_check(t, id);
      if (c_.json) {
        Json j;
        j["lemmaId"] = std::string(to_string(id));
        j["applicable"] = cert.has_value();
        j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
        arr.push_back(std::move(j));
        continue;
      }
      out_ << to_string(id) << ": ";
      if (!cert) {
        out_ << "not applicable\n";
        continue;
      }
      out_ << "witness " << format_broadcast(cert->witness) << " cost " << cert->witness.cost() << " > diam "
           << cert->diameter;
      if (cert->constructed_by != cert->lemma) out_ << " (constructed by " << to_string(cert->constructed_by) << ")";
      out_ << "\n    " << cert->evidence.description << "; indices " << join(cert->evidence.indices) << '\n';
    }
    if (c_.json) emit(arr);
    return kExitOk;
  }

  int sweep_cmd() const {
    std::ofstream jsonl, csv;
    if (!c_.out_path.empty()) {
      jsonl.open(c_.out_path);
      if (!jsonl) throw InputError("cannot open '" + c_.out_path + "' for writing");
    }
    if (!c_.csv_path.empty()) {
      csv.open(c_.csv_path);
      if (!csv) throw InputError("cannot open '" + c_.csv_path + "' for writing");
      csv << csv_header() << '\n';
    }
    SweepOptions o;
    o.n_max = c_.max_n;
    o.caterpillars_only = c_.caterpillars_only;
    o.threads = c_.threads;
    o.limits = c_.limits;
    const auto summary = sweep(o, [&](const SweepRecord& r) {
      if (jsonl.is_open()) jsonl << to_json(r).dump() << '\n';
      if (csv.is_open()) csv << to_csv(r) << '\n';
    });
    if ((jsonl.is_open() && !jsonl.flush()) || (csv.is_open() && !csv.flush()))
      throw InputError("write failure on sweep output");
    if (c_.json)
      emit(to_json(summary));
    else
      out_ << summary_table(summary);
    if (!summary.violations.empty()) {
      std::ostringstream msg;
      msg << summary.violations.size() << " invariant violation(s); first: " << summary.violations.front();
      throw InvariantViolation(msg.str());
    }
    return kExitOk;
  }

  int probe() const {
    const auto r = probe_isometric_monotonicity(c_.max_n, c_.limits);
    if (c_.json) {
      emit(to_json(r));
      return kExitOk;
    }
    out_ << "trees: " << r.trees << "\nsubtree pairs: " << r.pairs << "\nviolations: " << r.violations.size() << '\n';
    for (const auto& v : r.violations)
      out_ << v.host_code << " (" << v.host_value << ") contains " << v.subtree_code << " (" << v.subtree_value
           << ") on " << set_text(v.subtree_vertices) << '\n';
    return kExitOk;
  }

  int enumerate() const {
    const auto trees = enumerate_trees(c_.n, c_.caterpillars_only);
    if (c_.json) {
      Json arr = Json::array();
      for (const auto& t : trees) arr.push_back(c_.emit == "graph6" ? format_graph6(t) : format_edge_list(t));
      emit(arr);
      return kExitOk;
    }
    bool first = true;
    for (const auto& t : trees) {
      if (c_.emit == "graph6") {
        out_ << format_graph6(t) << '\n';
      } else {
        out_ << (first ? "" : "\n") << format_edge_list(t);
        first = false;
      }
    }
    return kExitOk;
  }

  int export_dot() const {
    const auto t = tree();
    std::optional<Broadcast> f;
    if (!c_.broadcast.empty()) f = parse_broadcast(c_.broadcast, metric_summary(t));
    out_ << format_dot(t, f);
    return kExitOk;
  }

 private:
  const Config& c_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Broadcast domination on trees: parameters, minimality, diametrical caterpillars."};
  app.name("bcast");
  app.require_subcommand(1);

  app.add_option("--format", c.format, "Input tree format")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->capture_default_str();
  app.add_flag("--json", c.json, "Machine-readable JSON output");
  app.add_option("--gamma-b-cap", c.limits.gamma_b_max, "Largest order for gamma_b")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--upper-gamma-b-cap", c.limits.upper_gamma_b_max, "Largest order for Gamma_b")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--set-cap", c.limits.set_max, "Largest order for alpha, gamma, Gamma")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();

  auto with_input = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("input", c.input, "Tree file ('-' for stdin)")->required();
    return sub;
  };

  auto* metrics = with_input(app.add_subcommand("metrics", "Distances, eccentricities and spine"));
  auto* check = with_input(app.add_subcommand("check-broadcast", "Full analysis of one broadcast"));
  check->add_option("--broadcast", c.broadcast, "Broadcast as v:p pairs, e.g. 0:2,3:2")->required();
  auto* gb = with_input(app.add_subcommand("gamma-b", "Broadcast domination number"));
  auto* ugb = with_input(app.add_subcommand("upper-gamma-b", "Upper broadcast number"));
  ugb->add_flag("--no-edge-prune", c.no_edge_prune, "Search without the cost <= n-1 prune");
  auto* diam = with_input(app.add_subcommand(
      "diametrical", "Is Gamma_b equal to the diameter? Default mode: crosscheck when n fits the Gamma_b cap, "
                     "theorem otherwise"));
  diam->add_option("--mode", c.mode, "auto|theorem|bruteforce|crosscheck")
      ->check(CLI::IsMember({"auto", "theorem", "bruteforce", "crosscheck"}));
  auto* wit = with_input(app.add_subcommand("witness", "Lemma certificates"));
  wit->add_option("--lemma", c.lemma, "L1..L5 or all")
      ->check(CLI::IsMember({"L1", "L2", "L3", "L4", "L5", "all"}))
      ->capture_default_str();

  auto* sw = app.add_subcommand("sweep", "Exhaustive sweep over all trees up to an order");
  sw->fallthrough();
  sw->add_option("--max-n", c.max_n, "Largest order")->required()->check(CLI::PositiveNumber);
  sw->add_flag("--caterpillars-only", c.caterpillars_only);
  sw->add_option("--out", c.out_path, "JSONL output file");
  sw->add_option("--csv", c.csv_path, "CSV output file");
  sw->add_option("--threads", c.threads, "Worker threads (0: hardware)")->check(CLI::NonNegativeNumber);

  auto* pr = app.add_subcommand("probe-isometric", "Gamma_b monotonicity over connected subtrees");
  pr->fallthrough();
  pr->add_option("--max-n", c.max_n, "Largest host order (<= 9)")->required()->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "Non-isomorphic trees of one order");
  en->fallthrough();
  en->add_option("--n", c.n, "Order")->required()->check(CLI::PositiveNumber);
  en->add_flag("--caterpillars-only", c.caterpillars_only);
  en->add_option("--emit", c.emit, "graph6|edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();

  auto* dot = with_input(app.add_subcommand("export-dot", "Graphviz rendering"));
  dot->add_option("--broadcast", c.broadcast, "Broadcast to highlight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Runner r(c, in, out);
  try {
    if (*metrics) return r.metrics();
    if (*check) return r.check_broadcast();
    if (*gb) return r.solver(false);
    if (*ugb) return r.solver(true);
    if (*diam) return r.diametrical();
    if (*wit) return r.witness();
    if (*sw) return r.sweep_cmd();
    if (*pr) return r.probe();
    if (*en) return r.enumerate();
    if (*dot) return r.export_dot();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotCaterpillar& e) {
    err << "not a caterpillar: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitInput;
}

}  // namespace bcast
