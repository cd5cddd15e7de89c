#include "bcast/diametrical.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "bcast/analysis.hpp"
#include "bcast/canonical.hpp"

namespace bcast {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::None: return "none";
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
  }
  return "?";
}

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "L1";
    case LemmaId::L2: return "L2";
    case LemmaId::L3: return "L3";
    case LemmaId::L4: return "L4";
    case LemmaId::L5: return "L5";
  }
  return "?";
}

LemmaId parse_lemma_id(std::string_view s) {
  if (s.size() == 2 && (s[0] == 'L' || s[0] == 'l') && s[1] >= '1' && s[1] <= '5')
    return static_cast<LemmaId>(s[1] - '0');
  throw InputError("unknown lemma '" + std::string(s) + "' (expected L1..L5)");
}

DiametricalMode parse_diametrical_mode(std::string_view s) {
  if (s == "auto") return DiametricalMode::Auto;
  if (s == "theorem") return DiametricalMode::Theorem;
  if (s == "bruteforce") return DiametricalMode::BruteForce;
  if (s == "crosscheck") return DiametricalMode::CrossCheck;
  throw InputError("unknown mode '" + std::string(s) + "' (expected auto|theorem|bruteforce|crosscheck)");
}

std::string_view to_string(DiametricalMode m) {
  switch (m) {
    case DiametricalMode::Auto: return "auto";
    case DiametricalMode::Theorem: return "theorem";
    case DiametricalMode::BruteForce: return "bruteforce";
    case DiametricalMode::CrossCheck: return "crosscheck";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Theorem conditions

TheoremVerdict theorem_check(const LabeledTree& t) {
  if (!is_caterpillar(t)) throw NotCaterpillar("theorem_check: tree is not a caterpillar");
  return theorem_check(t, spine_decomposition(t));
}

TheoremVerdict theorem_check(const LabeledTree& t, const SpineDecomposition& s) {
  if (!is_caterpillar(t)) throw NotCaterpillar("theorem_check: tree is not a caterpillar");
  const int d = s.diameter();
  auto deg = [&](int i) { return t.degree(s.at(i)); };

  for (int i = 1; i <= d - 1; ++i)
    if (s.leaf_count[static_cast<std::size_t>(i)] > 2) return {false, Condition::I, {i}};
  for (int i = 1; i <= d - 2; ++i)
    if (std::min(deg(i), deg(i + 1)) != 2) return {false, Condition::II, {i, i + 1}};
  for (int i = 1; i <= d - 1; ++i) {
    if (!s.is_strong_stem[static_cast<std::size_t>(i)]) continue;
    for (int j = i + 1; j <= d - 1; ++j) {
      if (!s.is_strong_stem[static_cast<std::size_t>(j)]) continue;
      bool separated = false;
      for (int k = i + 1; k < j && !separated; ++k) separated = deg(k) == 2 && deg(k + 1) == 2;
      if (!separated) return {false, Condition::III, {i, j}};
    }
  }
  return {};
}

bool evidence_holds(const LabeledTree& t, const SpineDecomposition& s, const TheoremVerdict& v) {
  auto deg = [&](int i) { return t.degree(s.at(i)); };
  auto leaves = [&](int i) {
    int c = 0;
    for (Vertex w : t.neighbours(s.at(i))) c += t.degree(w) == 1;
    return c;
  };
  const int d = s.diameter();
  switch (v.failed) {
    case Condition::None: return v.is_diametrical && v.evidence.empty();
    case Condition::I:
      return v.evidence.size() == 1 && v.evidence[0] >= 1 && v.evidence[0] <= d - 1 && leaves(v.evidence[0]) > 2;
    case Condition::II:
      return v.evidence.size() == 2 && v.evidence[1] == v.evidence[0] + 1 && v.evidence[0] >= 1 &&
             v.evidence[1] <= d - 1 && deg(v.evidence[0]) >= 3 && deg(v.evidence[1]) >= 3;
    case Condition::III: {
      if (v.evidence.size() != 2) return false;
      const int i = v.evidence[0], j = v.evidence[1];
      if (!(1 <= i && i < j && j <= d - 1) || leaves(i) < 2 || leaves(j) < 2) return false;
      for (int k = i + 1; k < j; ++k)
        if (deg(k) == 2 && deg(k + 1) == 2) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lemma hypotheses and constructions

namespace {

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

struct Context {
  const LabeledTree* t;
  MetricSummary m;
  BallIndex idx;
  SpineDecomposition s;
  int d;
  std::vector<VertexMask> open_nbr;

  explicit Context(const LabeledTree& tree)
      : t(&tree), m(metric_summary(tree)), idx(m), s(spine_decomposition(tree)), d(s.diameter()) {
    for (Vertex v = 0; v < tree.order(); ++v) {
      VertexMask nb = 0;
      for (Vertex w : tree.neighbours(v)) nb |= bit(w);
      open_nbr.push_back(nb);
    }
  }

  Context reversed() const {
    Context c = *this;
    c.s = s.reversed();
    return c;
  }

  Vertex v(int i) const { return s.at(i); }
  int deg(int i) const { return t->degree(v(i)); }

  VertexMask limb(int i) const { return vertices_to_mask(s.limb[static_cast<std::size_t>(i)]); }

  // Leaf neighbours of v_i that are not themselves on the spine.
  std::vector<Vertex> limb_leaves(int i) const {
    std::vector<Vertex> out;
    for (Vertex w : t->neighbours(v(i)))
      if (t->is_leaf(w) && s.limb_of[static_cast<std::size_t>(w)] == i) out.push_back(w);
    return out;
  }

  VertexMask closed(Vertex x) const { return open_nbr[static_cast<std::size_t>(x)] | bit(x); }

  VertexMask closed_of(VertexMask set) const {
    VertexMask out = 0;
    for (; set; set &= set - 1) out |= closed(std::countr_zero(set));
    return out;
  }

  bool independent(VertexMask set) const {
    for (VertexMask r = set; r; r &= r - 1)
      if (open_nbr[static_cast<std::size_t>(std::countr_zero(r))] & set) return false;
    return true;
  }

  std::string tree_code() const { return canonical_code(*t).code; }
};

// Largest independent S ⊆ candidates dominating `must` (ties: smallest
// mask), subject to |S| >= min_size.
std::optional<VertexMask> largest_independent_dominating(const Context& c, VertexMask candidates, VertexMask must,
                                                         int min_size) {
  if (std::popcount(candidates) > 24) throw CapExceeded("limb too large for subset search");
  std::optional<VertexMask> best;
  VertexMask sub = candidates;
  for (;;) {
    const int size = std::popcount(sub);
    if (size >= min_size && (!best || size >= std::popcount(*best)) && c.independent(sub) &&
        (c.closed_of(sub) & must) == must) {
      if (!best || size > std::popcount(*best) || sub < *best) best = sub;
    }
    if (sub == 0) break;
    sub = (sub - 1) & candidates;
  }
  return best;
}

int independence_number(const Context& c, VertexMask region) {
  if (std::popcount(region) > 24) throw CapExceeded("limb too large for subset search");
  int best = 0;
  VertexMask sub = region;
  for (;;) {
    if (std::popcount(sub) > best && c.independent(sub)) best = std::popcount(sub);
    if (sub == 0) break;
    sub = (sub - 1) & region;
  }
  return best;
}

struct LimbShape {
  int diameter = 0;
  int root_ecc = 0;  // eccentricity of v_i inside its limb
};

LimbShape limb_shape(const Context& c, int i) {
  LimbShape out;
  const auto& limb = c.s.limb[static_cast<std::size_t>(i)];
  for (Vertex a : limb) {
    out.root_ecc = std::max(out.root_ecc, c.m.distance(c.v(i), a));
    for (Vertex b : limb) out.diameter = std::max(out.diameter, c.m.distance(a, b));
  }
  return out;
}

// Seed broadcast plus, for each broadcast vertex, the private-boundary
// vertex the construction promises to protect.
struct Seed {
  std::vector<int> f;
  std::vector<std::pair<Vertex, Vertex>> keep;

  explicit Seed(int n) : f(static_cast<std::size_t>(n), 0) {}

  void put(Vertex x, int power, Vertex protect) {
    if (power <= 0) return;
    f[static_cast<std::size_t>(x)] = power;
    keep.emplace_back(x, protect);
  }
  void unit(Vertex x) { put(x, 1, x); }
  // A power-1 broadcast vertex never loses itself from its private
  // boundary to the completion step, so it protects itself.
  void endpoint(Vertex x, int power, Vertex designated) { put(x, power, power == 1 ? x : designated); }
};

std::optional<Broadcast> realize(const Context& c, const Seed& seed) {
  std::optional<Broadcast> g;
  try {
    g.emplace(c.m, seed.f);
  } catch (const InputError& e) {
    throw InvariantViolation(std::string("lemma seed violates an eccentricity cap: ") + e.what());
  }
  std::vector<Vertex> avoid;
  for (auto [x, p] : seed.keep) {
    if (!(private_boundary_mask(c.idx, seed.f, x) & bit(p))) return std::nullopt;
    avoid.push_back(p);
  }
  auto f = try_extend_to_minimal(*c.t, *g, avoid);
  if (!f) return std::nullopt;
  if (!is_minimal_dominating(c.idx, f->values()) || f->cost() <= c.d) return std::nullopt;
  return f;
}

using Built = std::pair<LemmaId, Broadcast>;

[[noreturn]] void construction_failed(const Context& c, LemmaId id, const std::string& why) {
  throw InvariantViolation(std::string(to_string(id)) + " hypothesis holds on tree " + c.tree_code() +
                           " but its construction failed: " + why);
}

Broadcast finish(const Context& c, LemmaId id, const Seed& seed, const char* which) {
  auto f = realize(c, seed);
  if (!f) construction_failed(c, id, which);
  return *f;
}

// Endpoint powers i-1 / d-i-1 around an index i, lowered by one on a side
// whose neighbouring spine vertex carries a leaf (its leaf would otherwise
// steal that spine vertex from the endpoint's private boundary).
void flanking_endpoints(const Context& c, Seed& seed, int left_power, int left_index, int right_power,
                        int right_index) {
  if (left_power >= 2 && !c.limb_leaves(left_index).empty()) {
    --left_power;
    --left_index;
  }
  if (right_power >= 2 && !c.limb_leaves(right_index).empty()) {
    --right_power;
    ++right_index;
  }
  seed.endpoint(c.v(0), left_power, c.v(left_index));
  seed.endpoint(c.v(c.d), right_power, c.v(right_index));
}

// L1 ------------------------------------------------------------------------

std::optional<HypothesisEvidence> hyp_l1(const Context& c) {
  if (c.d < 3) return std::nullopt;
  for (int i = 1; i <= c.d - 2; ++i) {
    auto a = c.limb_leaves(i), b = c.limb_leaves(i + 1);
    if (!a.empty() && !b.empty())
      return HypothesisEvidence{"v_i and v_{i+1} are both adjacent to leaves off the spine", {i, i + 1}, {a[0], b[0]}};
  }
  return std::nullopt;
}

Broadcast build_l1(const Context& c, const HypothesisEvidence& ev) {
  const int i = ev.indices[0];
  Seed seed(c.t->order());
  seed.put(c.v(0), i + 1, ev.vertices[0]);
  seed.put(c.v(c.d), c.d - i, ev.vertices[1]);
  return finish(c, LemmaId::L1, seed, "endpoint broadcasts g(v_0)=i+1, g(v_d)=d-i");
}

// L2 ------------------------------------------------------------------------

std::optional<HypothesisEvidence> hyp_l2(const Context& c) {
  if (c.d < 2) return std::nullopt;
  // deg(v_1) >= 4 and alpha(T_1) >= 2 are the same condition: T_1 is the
  // star formed by v_1 and its off-spine leaves.
  for (int side : {1, c.d - 1}) {
    const bool by_degree = c.deg(side) >= 4;
    const bool by_alpha = independence_number(c, c.limb(side)) >= 2;
    if (by_degree != by_alpha)
      throw InvariantViolation("deg(v_" + std::to_string(side) + ") >= 4 disagrees with alpha(T_" +
                               std::to_string(side) + ") >= 2 on tree " + c.tree_code());
  }
  if (c.deg(1) >= 4) return HypothesisEvidence{"deg(v_1) >= 4", {1}, c.limb_leaves(1)};
  if (c.deg(c.d - 1) >= 4) return HypothesisEvidence{"deg(v_{d-1}) >= 4", {c.d - 1}, c.limb_leaves(c.d - 1)};
  for (int i = 2; i <= c.d - 2; ++i) {
    const VertexMask limb = c.limb(i);
    auto s = largest_independent_dominating(c, limb & ~bit(c.v(i)), limb, 3);
    if (s)
      return HypothesisEvidence{"T_i has an independent dominating set of size >= 3 avoiding v_i", {i},
                                mask_to_vertices(*s)};
  }
  return std::nullopt;
}

Broadcast build_l2_star(const Context& c) {
  Seed seed(c.t->order());
  seed.unit(c.v(0));
  for (Vertex x : c.limb_leaves(1)) seed.unit(x);
  seed.endpoint(c.v(c.d), c.d - 2, c.v(std::min(2, c.d)));
  return finish(c, LemmaId::L2, seed, "star case: unit broadcasts on v_0 and the leaves of T_1, g(v_d)=d-2");
}

Broadcast build_l2_limb(const Context& c, int i, const std::vector<Vertex>& s) {
  Seed seed(c.t->order());
  for (Vertex x : s) seed.unit(x);
  flanking_endpoints(c, seed, i - 1, i - 1, c.d - i - 1, i + 1);
  return finish(c, LemmaId::L2, seed, "limb case: g(v_0)=i-1, g(v_d)=d-i-1 plus S");
}

Built build_l2(const Context& c, const HypothesisEvidence& ev) {
  if (auto e1 = hyp_l1(c)) return {LemmaId::L1, build_l1(c, *e1)};
  if (c.deg(1) >= 4) return {LemmaId::L2, build_l2_star(c)};
  if (c.deg(c.d - 1) >= 4) return {LemmaId::L2, build_l2_star(c.reversed())};
  return {LemmaId::L2, build_l2_limb(c, ev.indices[0], ev.vertices)};
}

// L3 ------------------------------------------------------------------------

std::optional<HypothesisEvidence> hyp_l3(const Context& c) {
  for (int i = 2; i <= c.d - 2; ++i) {
    const auto cand = mask_to_vertices(c.limb(i) & ~c.closed(c.v(i)));
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (!c.t->adjacent(cand[a], cand[b]))
          return HypothesisEvidence{"T_i has an independent pair that does not dominate v_i", {i}, {cand[a], cand[b]}};
  }
  return std::nullopt;
}

Built build_l3(const Context& c, const HypothesisEvidence& ev) {
  if (auto e1 = hyp_l1(c)) return {LemmaId::L1, build_l1(c, *e1)};
  const int i = ev.indices[0];
  const VertexMask limb = c.limb(i);
  // S: a maximal independent set of T_i - v_i with no vertex adjacent to v_i.
  auto s = largest_independent_dominating(c, limb & ~c.closed(c.v(i)), limb & ~bit(c.v(i)), 2);
  if (!s) {
    // Every such extension dominates v_i, so T_i carries an independent
    // dominating set of size >= 3 avoiding v_i.
    auto e2 = hyp_l2(c);
    if (!e2) construction_failed(c, LemmaId::L3, "no admissible S and the L2 hypothesis does not hold");
    return build_l2(c, *e2);
  }
  Seed seed(c.t->order());
  for (Vertex x : mask_to_vertices(*s)) seed.unit(x);
  seed.endpoint(c.v(0), i, c.v(i));
  int right_power = c.d - i - 1, right_index = i + 1;
  if (right_power >= 2 && !c.limb_leaves(i + 1).empty()) {
    --right_power;
    ++right_index;
  }
  seed.endpoint(c.v(c.d), right_power, c.v(right_index));
  return {LemmaId::L3, finish(c, LemmaId::L3, seed, "g(v_0)=i, g(v_d)=d-i-1 plus S")};
}

// L4 ------------------------------------------------------------------------

std::optional<HypothesisEvidence> hyp_l4(const Context& c) {
  for (int i = 0; i <= c.d; ++i) {
    const auto shape = limb_shape(c, i);
    if (shape.diameter >= 4 || (shape.diameter == 3 && shape.root_ecc == 3))
      return HypothesisEvidence{"diam(T_i) >= 4, or diam(T_i) = 3 with v_i peripheral in T_i",
                                {i, shape.diameter, shape.root_ecc},
                                {}};
  }
  return std::nullopt;
}

Built build_l4(const Context& c, const HypothesisEvidence& ev) {
  if (auto e1 = hyp_l1(c)) return {LemmaId::L1, build_l1(c, *e1)};
  const int i = ev.indices[0];
  const Vertex vi = c.v(i);
  const auto shape = limb_shape(c, i);
  const auto& limb = c.s.limb[static_cast<std::size_t>(i)];

  if ((shape.diameter == 3 || shape.diameter == 4) && shape.root_ecc == shape.diameter) {
    const int k = shape.diameter;
    // limb lists are in BFS order from v_i, so this is a farthest vertex
    const Vertex far = *std::find_if(limb.begin(), limb.end(), [&](Vertex x) { return c.m.distance(vi, x) == k; });
    Seed seed(c.t->order());
    seed.put(far, k, vi);
    flanking_endpoints(c, seed, i - 1, i - 1, c.d - i - 1, i + 1);
    return {LemmaId::L4, finish(c, LemmaId::L4, seed, "peripheral case: g(l)=k, g(v_0)=i-1, g(v_d)=d-i-1")};
  }

  const bool vi_is_stem_in_limb = !c.limb_leaves(i).empty();
  if (shape.diameter == 4 && shape.root_ecc == 2 && !vi_is_stem_in_limb) {
    // v_i is the centre of a P_5 inside T_i: take depth-2 vertices in two
    // different branches.
    std::vector<Vertex> depth2;
    for (Vertex x : limb)
      if (c.m.distance(vi, x) == 2) depth2.push_back(x);
    std::sort(depth2.begin(), depth2.end());
    const Vertex l1 = depth2.front();
    auto branch = [&](Vertex x) {
      for (Vertex w : c.t->neighbours(x))
        if (c.m.distance(vi, w) == 1) return w;
      return -1;
    };
    auto it = std::find_if(depth2.begin(), depth2.end(), [&](Vertex x) { return branch(x) != branch(l1); });
    if (it == depth2.end()) construction_failed(c, LemmaId::L4, "centre case without two depth-2 branches");
    Seed seed(c.t->order());
    seed.put(l1, 2, vi);
    seed.unit(*it);
    flanking_endpoints(c, seed, i - 1, i - 1, c.d - i - 1, i + 1);
    return {LemmaId::L4, finish(c, LemmaId::L4, seed, "centre case: g(l1)=2, g(l2)=1, g(v_0)=i-1, g(v_d)=d-i-1")};
  }

  // Remaining shapes contain an independent configuration that triggers L2
  // or L3 on the same limb.
  if (auto e2 = hyp_l2(c)) return build_l2(c, *e2);
  if (auto e3 = hyp_l3(c)) return build_l3(c, *e3);
  construction_failed(c, LemmaId::L4, "no sub-case applies and neither L2 nor L3 holds");
}

// L5 ------------------------------------------------------------------------

std::optional<HypothesisEvidence> hyp_l5(const Context& c) {
  if (!is_caterpillar(*c.t)) return std::nullopt;
  const auto& strong = c.s.is_strong_stem;
  const auto& stem = c.s.is_stem;
  for (int i = 1; i <= c.d - 1; ++i) {
    if (!strong[static_cast<std::size_t>(i)]) continue;
    for (int k = 1; i + 2 * k <= c.d - 1; ++k) {
      const int j = i + 2 * k;
      if (strong[static_cast<std::size_t>(j)])
        return HypothesisEvidence{"strong stems v_i and v_{i+2k} with a stem at every second vertex between",
                                  {i, k},
                                  {}};
      if (!stem[static_cast<std::size_t>(j)]) break;
    }
  }
  return std::nullopt;
}

Broadcast build_l5_oriented(const Context& c, int i, int k) {
  const int j = i + 2 * k;
  Seed seed(c.t->order());
  for (int r = 0; r <= k; ++r)
    for (Vertex w : c.t->neighbours(c.v(i + 2 * r)))
      if (c.t->is_leaf(w)) seed.unit(w);
  for (int r = 0; r < k; ++r) {
    const int x = i + 2 * r + 1;
    if (c.deg(x) != 2) construction_failed(c, LemmaId::L5, "odd spine vertex between the stems has degree > 2");
    seed.unit(c.v(x));
  }
  if (j < c.d - 1) {
    if (c.deg(j + 1) != 2) construction_failed(c, LemmaId::L5, "v_{i+2k+1} has degree > 2");
    seed.endpoint(c.v(c.d), c.d - j - 1, c.v(j + 1));
  }
  if (i > 1) {
    if (c.deg(i - 1) != 2) construction_failed(c, LemmaId::L5, "v_{i-1} has degree > 2");
    seed.endpoint(c.v(0), i - 1, c.v(i - 1));
  }
  return finish(c, LemmaId::L5, seed, "unit broadcasts on S ∪ X with endpoint powers i-1, d-i-2k-1");
}

Built build_l5(const Context& c, const HypothesisEvidence& ev) {
  if (auto e1 = hyp_l1(c)) return {LemmaId::L1, build_l1(c, *e1)};
  const int i = ev.indices[0], k = ev.indices[1];
  if (i > 1 && i + 2 * k == c.d - 1) return {LemmaId::L5, build_l5_oriented(c.reversed(), 1, k)};
  return {LemmaId::L5, build_l5_oriented(c, i, k)};
}

std::optional<HypothesisEvidence> hypothesis(const Context& c, LemmaId id) {
  switch (id) {
    case LemmaId::L1: return hyp_l1(c);
    case LemmaId::L2: return hyp_l2(c);
    case LemmaId::L3: return hyp_l3(c);
    case LemmaId::L4: return hyp_l4(c);
    case LemmaId::L5: return hyp_l5(c);
  }
  return std::nullopt;
}

Built construct(const Context& c, LemmaId id, const HypothesisEvidence& ev) {
  switch (id) {
    case LemmaId::L1: return {LemmaId::L1, build_l1(c, ev)};
    case LemmaId::L2: return build_l2(c, ev);
    case LemmaId::L3: return build_l3(c, ev);
    case LemmaId::L4: return build_l4(c, ev);
    case LemmaId::L5: return build_l5(c, ev);
  }
  throw InvariantViolation("unknown lemma id");
}

}  // namespace

std::optional<HypothesisEvidence> lemma_hypothesis(const LabeledTree& t, LemmaId id) {
  return hypothesis(Context(t), id);
}

std::vector<LemmaId> firing_lemmas(const LabeledTree& t) {
  const Context c(t);
  std::vector<LemmaId> out;
  for (LemmaId id : kAllLemmas)
    if (hypothesis(c, id)) out.push_back(id);
  return out;
}

std::optional<WitnessCertificate> lemma_check(const LabeledTree& t, LemmaId id) {
  const Context c(t);
  auto ev = hypothesis(c, id);
  if (!ev) return std::nullopt;
  auto [by, witness] = construct(c, id, *ev);
  WitnessCertificate cert{id, by, std::move(*ev), std::move(witness), c.d};
  if (!certificate_valid(t, cert))
    throw InvariantViolation(std::string(to_string(id)) + " certificate failed re-validation on tree " + c.tree_code());
  return cert;
}

bool certificate_valid(const LabeledTree& t, const WitnessCertificate& cert) {
  if (cert.witness.order() != t.order()) return false;
  const auto m = metric_summary(t);
  const auto a = analyze(BallIndex(m), cert.witness);
  return a.is_minimal_dominating && a.cost > m.diameter;
}

// ---------------------------------------------------------------------------

DiametricalDecision is_diametrical(const LabeledTree& t, DiametricalMode mode, const SolverLimits& limits) {
  DiametricalDecision out;
  out.diameter = metric_summary(t).diameter;
  const bool caterpillar = is_caterpillar(t);
  if (mode == DiametricalMode::Auto) mode = caterpillar ? DiametricalMode::Theorem : DiametricalMode::BruteForce;

  if (mode == DiametricalMode::Theorem || (mode == DiametricalMode::CrossCheck && caterpillar))
    out.verdict = theorem_check(t);
  if (mode == DiametricalMode::BruteForce || mode == DiametricalMode::CrossCheck)
    out.upper_gamma_b = upper_gamma_b_exact(t, limits).value;

  switch (mode) {
    case DiametricalMode::Theorem:
      out.is_diametrical = out.verdict->is_diametrical;
      out.provenance = "theorem";
      break;
    case DiametricalMode::BruteForce:
      out.is_diametrical = *out.upper_gamma_b == out.diameter;
      out.provenance = "bruteforce";
      break;
    case DiametricalMode::CrossCheck:
      out.is_diametrical = *out.upper_gamma_b == out.diameter;
      out.provenance = "crosscheck";
      if (out.verdict && out.verdict->is_diametrical != out.is_diametrical)
        throw InvariantViolation("theorem and brute force disagree on tree " + canonical_code(t).code);
      break;
    case DiametricalMode::Auto: break;
  }
  return out;
}

}  // namespace bcast
