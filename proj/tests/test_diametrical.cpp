#include <doctest.h>

#include "bcast/analysis.hpp"
#include "bcast/canonical.hpp"
#include "bcast/diametrical.hpp"
#include "bcast/enumerate.hpp"
#include "bcast/metrics.hpp"
#include "bcast/serialize.hpp"
#include "support.hpp"

using namespace bcast;

TEST_SUITE("diametrical") {

TEST_CASE("theorem_check on the base cases and known failures") {
  for (const auto& t : {make_path(3), make_path(4), fixtures::chair()}) {
    auto v = theorem_check(t);
    CHECK(v.is_diametrical);
    CHECK(v.failed == Condition::None);
    CHECK(v.evidence.empty());
  }
  auto k13 = theorem_check(make_star(3));
  CHECK_FALSE(k13.is_diametrical);
  CHECK(k13.failed == Condition::I);
  CHECK(k13.evidence == std::vector<int>{1});

  auto two = theorem_check(fixtures::two_strong_stems());
  CHECK(two.failed == Condition::III);
  CHECK(two.evidence == std::vector<int>{1, 3});

  auto ds = theorem_check(fixtures::double_star());
  CHECK(ds.failed == Condition::II);
  CHECK(ds.evidence == std::vector<int>{1, 2});

  CHECK_THROWS_AS(theorem_check(fixtures::spider3()), NotCaterpillar);
  CHECK_THROWS_AS(theorem_check(make_path(2)), NotCaterpillar);
}

TEST_CASE("failure evidence re-validates independently on every caterpillar up to 11 vertices") {
  for (int n = 3; n <= 11; ++n)
    for (const auto& t : enumerate_trees(n, true)) {
      const auto s = spine_decomposition(t);
      const auto v = theorem_check(t, s);
      CHECK(v.is_diametrical == (v.failed == Condition::None));
      CHECK(evidence_holds(t, s, v));
    }
  // Tampered evidence is caught.
  const auto t = fixtures::double_star();
  const auto s = spine_decomposition(t);
  CHECK_FALSE(evidence_holds(t, s, TheoremVerdict{false, Condition::II, {0, 1}}));
  CHECK_FALSE(evidence_holds(t, s, TheoremVerdict{false, Condition::I, {1}}));
}

TEST_CASE("theorem verdict does not depend on which diametrical path is used, caterpillars n <= 11") {
  int trees_with_several_paths = 0;
  for (int n = 3; n <= 11; ++n)
    for (const auto& t : enumerate_trees(n, true)) {
      const bool expected = theorem_check(t).is_diametrical;
      const auto paths = all_diametrical_paths(t);
      trees_with_several_paths += paths.size() > 1;
      for (auto p : paths) {
        for (int flip = 0; flip < 2; ++flip) {
          const auto s = decompose_along(t, p);
          const auto v = theorem_check(t, s);
          CHECK(v.is_diametrical == expected);
          CHECK(evidence_holds(t, s, v));
          std::reverse(p.begin(), p.end());
        }
      }
    }
  CHECK(trees_with_several_paths > 0);
}

TEST_CASE("lemma examples") {
  auto l1 = lemma_check(fixtures::double_star(), LemmaId::L1);
  REQUIRE(l1);
  CHECK(format_broadcast(l1->witness) == "0:2,3:2");
  CHECK(l1->witness.cost() == 4);
  CHECK(l1->evidence.indices == std::vector<int>{1, 2});
  CHECK(certificate_valid(fixtures::double_star(), *l1));

  CHECK_FALSE(lemma_check(make_star(4), LemmaId::L1));

  auto l5 = lemma_check(fixtures::two_strong_stems(), LemmaId::L5);
  REQUIRE(l5);
  CHECK(l5->constructed_by == LemmaId::L5);
  CHECK(l5->evidence.indices == std::vector<int>{1, 1});
  CHECK(format_broadcast(l5->witness) == "0:1,2:1,4:1,5:1,6:1");
  CHECK(l5->witness.cost() == 5);

  // K_{1,4}: L2's star form.
  auto l2 = lemma_check(make_star(4), LemmaId::L2);
  REQUIRE(l2);
  CHECK(l2->witness.cost() == 4);

  for (LemmaId id : kAllLemmas) {
    CHECK_FALSE(lemma_check(make_path(7), id));
    CHECK_FALSE(lemma_check(fixtures::chair(), id));
  }
}

TEST_CASE("L3 and L4 fire on limbs of the expected shapes") {
  // Spine 0..6 with the limb 3-7-8, 3-9-10 (v_3 centre of a P_5 in T_3).
  const auto p5_centre =
      build_tree(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {7, 8}, {3, 9}, {9, 10}});
  CHECK(lemma_hypothesis(p5_centre, LemmaId::L4));
  auto l4 = lemma_check(p5_centre, LemmaId::L4);
  REQUIRE(l4);
  CHECK(l4->witness.cost() > 6);

  // {8, 10} is an independent pair of T_3 outside N[v_3].
  CHECK(lemma_hypothesis(p5_centre, LemmaId::L3));
  CHECK(lemma_check(p5_centre, LemmaId::L3));
}

TEST_CASE("lemma soundness and coherence with the theorem on every tree up to 9 vertices") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const auto m = metric_summary(t);
      bool fired = false;
      for (LemmaId id : kAllLemmas) {
        std::optional<WitnessCertificate> c;
        REQUIRE_NOTHROW(c = lemma_check(t, id));
        CHECK(c.has_value() == lemma_hypothesis(t, id).has_value());
        if (!c) continue;
        fired = true;
        const auto a = analyze(t, c->witness);
        CHECK(a.is_minimal_dominating);
        CHECK(a.cost > m.diameter);
      }
      if (fired && is_caterpillar(t)) CHECK_FALSE(theorem_check(t).is_diametrical);
    }
}

TEST_CASE("on caterpillars other than K_{1,3}, some lemma fires exactly when the theorem says non-diametrical") {
  // K_{1,3} is non-diametrical but too small for any lemma.
  const auto k13 = canonical_code(make_star(3)).code;
  int misses = 0;
  for (int n = 3; n <= 11; ++n)
    for (const auto& t : enumerate_trees(n, true)) {
      const bool silent = firing_lemmas(t).empty();
      if (canonical_code(t).code == k13) {
        CHECK(silent);
        ++misses;
        continue;
      }
      CHECK(silent == theorem_check(t).is_diametrical);
    }
  CHECK(misses == 1);
}

TEST_CASE("is_diametrical modes") {
  for (auto mode : {DiametricalMode::Auto, DiametricalMode::Theorem, DiametricalMode::BruteForce,
                    DiametricalMode::CrossCheck})
    CHECK(is_diametrical(make_path(7), mode).is_diametrical);

  auto k13 = is_diametrical(make_star(3), DiametricalMode::BruteForce);
  CHECK_FALSE(k13.is_diametrical);
  CHECK(k13.upper_gamma_b == 3);
  CHECK(k13.diameter == 2);

  auto x = is_diametrical(fixtures::spine5_leaf_on_middle(), DiametricalMode::CrossCheck);
  CHECK(x.is_diametrical);
  CHECK(x.upper_gamma_b == 4);
  CHECK(x.verdict);
  CHECK(x.provenance == "crosscheck");

  CHECK(is_diametrical(fixtures::spider3()).provenance == "bruteforce");
  CHECK(is_diametrical(make_path(2)).is_diametrical);
  CHECK_THROWS_AS(is_diametrical(fixtures::spider3(), DiametricalMode::Theorem), NotCaterpillar);
  CHECK_THROWS_AS(is_diametrical(make_path(13), DiametricalMode::BruteForce), CapExceeded);
  CHECK(is_diametrical(make_path(13), DiametricalMode::Theorem).is_diametrical);
}

TEST_CASE("parsing and serialization") {
  CHECK(parse_lemma_id("L3") == LemmaId::L3);
  CHECK(parse_lemma_id("l5") == LemmaId::L5);
  CHECK_THROWS_AS(parse_lemma_id("L6"), InputError);
  CHECK(parse_diametrical_mode("crosscheck") == DiametricalMode::CrossCheck);
  CHECK_THROWS_AS(parse_diametrical_mode("fast"), InputError);

  auto c = lemma_check(fixtures::double_star(), LemmaId::L1);
  auto j = to_json(*c);
  CHECK(j["lemmaId"] == "L1");
  CHECK(j["witness"] == "0:2,3:2");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"lemmaId", "constructedBy", "evidence", "witness", "cost", "diameter"});
  // An external checker needs only the tree and the witness text.
  const auto m = metric_summary(fixtures::double_star());
  auto f = parse_broadcast(j["witness"].get<std::string>(), m);
  CHECK(analyze(fixtures::double_star(), f).is_minimal_dominating);
}

}  // TEST_SUITE
