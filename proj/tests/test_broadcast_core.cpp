#include <doctest.h>

#include <random>

#include "bcast/analysis.hpp"
#include "bcast/enumerate.hpp"
#include "bcast/metrics.hpp"
#include "bcast/solvers.hpp"
#include "support.hpp"

using namespace bcast;

namespace {

Broadcast bc(const LabeledTree& t, std::initializer_list<std::pair<Vertex, int>> entries) {
  std::vector<int> f(static_cast<std::size_t>(t.order()), 0);
  for (auto [v, p] : entries) f[static_cast<std::size_t>(v)] = p;
  return Broadcast(t, f);
}

// Every broadcast f <= ecc on t.
template <class Visit>
void for_each_broadcast(const MetricSummary& m, Visit&& visit) {
  std::vector<int> f(static_cast<std::size_t>(m.n), 0);
  for (;;) {
    visit(f);
    int k = 0;
    while (k < m.n && f[static_cast<std::size_t>(k)] == m.eccentricity(k)) f[static_cast<std::size_t>(k++)] = 0;
    if (k == m.n) return;
    ++f[static_cast<std::size_t>(k)];
  }
}

}  // namespace

TEST_SUITE("broadcast-core") {

TEST_CASE("broadcast validation and text format") {
  const auto p3 = make_path(3);
  CHECK_THROWS_AS(bc(p3, {{1, 2}}), InputError);
  CHECK_THROWS_AS(bc(p3, {{0, -1}}), InputError);
  try {
    bc(p3, {{1, 2}});
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
  }
  const auto m = metric_summary(fixtures::double_star());
  const auto f = parse_broadcast("0:2,3:2", m);
  CHECK(format_broadcast(f) == "0:2,3:2");
  CHECK(f.cost() == 4);
  CHECK(format_broadcast(parse_broadcast(" 3:2 , 0:2 ", m)) == "0:2,3:2");
  CHECK(parse_broadcast("", m).cost() == 0);
  CHECK_THROWS_AS(parse_broadcast("0:2,0:1", m), InputError);
  CHECK_THROWS_AS(parse_broadcast("0-2", m), InputError);
  CHECK_THROWS_AS(parse_broadcast("9:1", m), InputError);
  CHECK_THROWS_AS(parse_broadcast("4:4", m), InputError);
}

TEST_CASE("analyze: worked examples") {
  const auto p3 = make_path(3);
  auto a = analyze(p3, bc(p3, {{1, 1}}));
  CHECK(a.is_dominating);
  CHECK(a.is_minimal_dominating);
  CHECK(a.at(1).private_boundary == std::vector<Vertex>{0, 1, 2});
  CHECK(a.at(1).private_neighbourhood == std::vector<Vertex>{0, 1, 2});

  const auto p4 = make_path(4);
  auto b = analyze(p4, bc(p4, {{0, 1}, {3, 1}}));
  CHECK(b.is_minimal_dominating);
  CHECK(b.cost == 2);
  CHECK(b.at(0).private_boundary == std::vector<Vertex>{0, 1});
  CHECK(b.at(3).private_boundary == std::vector<Vertex>{2, 3});

  const auto ds = fixtures::double_star();
  auto c = analyze(ds, bc(ds, {{0, 2}, {3, 2}}));
  CHECK(c.is_minimal_dominating);
  CHECK(c.cost == 4);
  CHECK(c.at(0).private_boundary == std::vector<Vertex>{4});
  CHECK(c.at(3).private_boundary == std::vector<Vertex>{5});
  CHECK(c.at(0).boundary == std::vector<Vertex>{2, 4});
  CHECK(c.broadcast_vertices == std::vector<Vertex>{0, 3});
}

TEST_CASE("hearing and overdomination") {
  const auto p3 = make_path(3), p4 = make_path(4);
  const auto m3 = metric_summary(p3), m4 = metric_summary(p4);
  const auto f = bc(p3, {{1, 1}});
  CHECK(hears(m3, f, 0) == std::vector<Vertex>{1});
  CHECK(edge_hears(m3, f, {0, 1}));
  const auto g = bc(p4, {{0, 1}, {3, 1}});
  CHECK_FALSE(edge_hears(m4, g, {1, 2}));
  const auto p5 = make_path(5);
  const auto m5 = metric_summary(p5);
  CHECK(overdominates(m5, bc(p5, {{2, 2}}), 2, 1));
  CHECK_FALSE(overdominates(m5, bc(p5, {{2, 2}}), 2, 0));
  CHECK_FALSE(overdominates(m3, f, 1, 0));
}

TEST_CASE("minimality by definition") {
  const auto p3 = make_path(3);
  CHECK(is_minimal_by_definition(p3, bc(p3, {{1, 1}})));
  CHECK_FALSE(is_minimal_by_definition(p3, bc(p3, {{0, 1}, {1, 1}})));
  CHECK_THROWS_AS(is_minimal_by_definition(p3, bc(p3, {{0, 1}})), DomainError);
}

TEST_CASE("derived-set invariants, PB identity and both minimality oracles on all broadcasts, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const auto m = metric_summary(t);
      const BallIndex idx(m);
      for_each_broadcast(m, [&](const std::vector<int>& values) {
        const Broadcast f(m, values);
        const auto a = analyze(idx, f);
        check_private_boundary_identity(a);
        std::vector<bool> dominated(static_cast<std::size_t>(n), false);
        int cost = 0;
        for (Vertex v = 0; v < n; ++v) cost += f[v];
        CHECK(a.cost == cost);
        for (const auto& va : a.per_vertex) {
          for (Vertex u : va.neighbourhood) dominated[static_cast<std::size_t>(u)] = true;
          for (Vertex u : va.boundary) CHECK(m.distance(va.vertex, u) == va.power);
          for (Vertex u : va.private_boundary) {
            // Definition: undominated once f(v) drops by one.
            std::vector<int> lowered = values;
            --lowered[static_cast<std::size_t>(va.vertex)];
            const bool still = (dominated_mask(idx, lowered) >> u) & 1;
            CHECK_FALSE(still);
          }
        }
        std::vector<Vertex> dom;
        for (Vertex v = 0; v < n; ++v)
          if (dominated[static_cast<std::size_t>(v)]) dom.push_back(v);
        CHECK(a.dominated == dom);
        CHECK(a.is_dominating == (static_cast<int>(dom.size()) == n));
        if (a.is_dominating) {
          CHECK(a.is_minimal_dominating == is_minimal_by_definition(t, f));
          CHECK(a.is_minimal_dominating == is_minimal_by_definition_exhaustive(t, f));
        } else {
          CHECK_FALSE(a.is_minimal_dominating);
        }
      });
    }
}

TEST_CASE("domination is monotone and private boundaries only shrink as broadcasts grow, n <= 7") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const auto m = metric_summary(t);
      const BallIndex idx(m);
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> f(static_cast<std::size_t>(n)), g;
        for (Vertex v = 0; v < n; ++v)
          f[static_cast<std::size_t>(v)] = rng() % 3 == 0 ? static_cast<int>(rng() % (m.eccentricity(v) + 1u)) : 0;
        g = f;
        // g raises one vertex; every other value is unchanged
        const Vertex bump = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        if (g[static_cast<std::size_t>(bump)] < m.eccentricity(bump)) ++g[static_cast<std::size_t>(bump)];
        if (is_dominating(idx, f)) CHECK(is_dominating(idx, g));
        for (Vertex v = 0; v < n; ++v) {
          if (v == bump || f[static_cast<std::size_t>(v)] == 0) continue;
          const VertexMask before = private_boundary_mask(idx, f, v);
          const VertexMask after = private_boundary_mask(idx, g, v);
          CHECK((after & ~before) == 0);
        }
      }
    }
}

TEST_CASE("characteristic functions of minimal dominating sets are minimal dominating broadcasts, n <= 8") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const BallIndex idx(t);
      std::vector<VertexMask> closed;
      for (Vertex v = 0; v < n; ++v) closed.push_back(idx.neighbourhood(v));
      auto dominated = [&](VertexMask s) {
        VertexMask d = 0;
        for (Vertex v = 0; v < n; ++v)
          if ((s >> v) & 1) d |= closed[static_cast<std::size_t>(v)];
        return d;
      };
      for (VertexMask s = 1; s <= idx.all(); ++s) {
        if (dominated(s) != idx.all()) continue;
        bool minimal = true;
        for (Vertex v = 0; v < n && minimal; ++v)
          if ((s >> v) & 1) minimal = dominated(s & ~(VertexMask{1} << v)) != idx.all();
        if (!minimal) continue;
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) f[static_cast<std::size_t>(v)] = static_cast<int>((s >> v) & 1);
        CHECK(is_minimal_dominating(idx, f));
      }
    }
}

TEST_CASE("restriction") {
  const auto p4 = make_path(4);
  const std::vector<Vertex> first{0, 1};
  auto r = restrict_broadcast(p4, bc(p4, {{0, 1}, {3, 1}}), first);
  CHECK(r.tree == make_path(2));
  CHECK(format_broadcast(r.broadcast) == "0:1");

  const auto p5 = make_path(5);
  const std::vector<Vertex> left{0, 1, 2};
  auto r2 = restrict_broadcast(p5, bc(p5, {{2, 2}}), left);
  CHECK(format_broadcast(r2.broadcast) == "2:2");

  const std::vector<Vertex> right{2, 3, 4};
  CHECK_THROWS_AS(restrict_broadcast(p5, bc(p5, {{4, 3}}), right), InputError);
  const std::vector<Vertex> gap{0, 2};
  CHECK_THROWS_AS(restrict_broadcast(p5, bc(p5, {{2, 2}}), gap), InputError);
}

TEST_CASE("extension to a minimal dominating broadcast") {
  const auto ds = fixtures::double_star();
  const auto g = bc(ds, {{0, 2}, {3, 2}});
  CHECK(extend_to_minimal(ds, g, {}) == g);

  const auto p6 = make_path(6);
  auto f = extend_to_minimal(p6, bc(p6, {{0, 1}}), {});
  CHECK(format_broadcast(f) == "0:1,2:1,4:1");
  CHECK(analyze(p6, f).is_minimal_dominating);

  // T' = {2,3,4,5}; protecting vertex 1 forbids 2, leaving {3,5}.
  const std::vector<Vertex> avoid{1};
  CHECK(format_broadcast(extend_to_minimal(p6, bc(p6, {{0, 1}}), avoid)) == "0:1,3:1,5:1");

  // P_3 with g = 1 at leaf 0: T' = {2}, but 2 neighbours the protected 1.
  const auto p3 = make_path(3);
  CHECK_FALSE(try_extend_to_minimal(p3, bc(p3, {{0, 1}}), avoid).has_value());
  CHECK_THROWS_AS(extend_to_minimal(p3, bc(p3, {{0, 1}}), avoid), DomainError);

  // g with an empty private boundary violates the precondition.
  CHECK_THROWS_AS(extend_to_minimal(p3, bc(p3, {{0, 1}, {1, 1}}), {}), DomainError);
}

TEST_CASE("maximal independent sets avoiding forbidden vertices need the exact fallback sometimes") {
  // Path 0-1-2: region {0,1,2}, forbid 0 and 2. Only {1} remains and it
  // dominates the region.
  const auto p3 = make_path(3);
  auto s = maximal_independent_avoiding(p3, 0b111, 0b101);
  REQUIRE(s.has_value());
  CHECK(*s == 0b010);
  // Forbid 1 on P_2 region {0,1}: {0} works.
  CHECK(maximal_independent_avoiding(make_path(2), 0b11, 0b10) == VertexMask{0b01});
  // Forbid everything: impossible.
  CHECK_FALSE(maximal_independent_avoiding(p3, 0b111, 0b111).has_value());
  // P_4 region all, forbid 2: greedy picks 0 then 3 fine; forbid {0,3}: {1,2} adjacent, fails.
  CHECK_FALSE(maximal_independent_avoiding(make_path(4), 0b1111, 0b1001).has_value());
}

}  // TEST_SUITE
