#pragma once

// Independent oracles and fixtures shared by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bcast/canonical.hpp"
#include "bcast/tree.hpp"

namespace fixtures {

using bcast::Edge;
using bcast::LabeledTree;
using bcast::Vertex;

inline LabeledTree path(int n) { return bcast::make_path(n); }
inline LabeledTree star(int leaves) { return bcast::make_star(leaves); }

// P_4 0-1-2-3 with leaf 4 on vertex 1.
inline LabeledTree chair() { return bcast::build_tree(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}); }

// Path 0-1-2-3, leaf 4 on 1, leaf 5 on 2.
inline LabeledTree double_star() { return bcast::build_tree(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}}); }

// Centre 0 with three legs of length 2.
inline LabeledTree spider3() { return bcast::build_tree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

// Spine 0-1-2-3-4 with extra leaves 5 on 1 and 6 on 3.
inline LabeledTree two_strong_stems() {
  return bcast::build_tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}});
}

// Spine 0-1-2-3-4 with leaf 5 on 2.
inline LabeledTree spine5_leaf_on_middle() {
  return bcast::build_tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
}

inline LabeledTree relabel(const LabeledTree& t, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, w] : t.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(w)]);
  return bcast::build_tree(t.order(), edges);
}

inline LabeledTree random_relabel(const LabeledTree& t, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(t.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(t, perm);
}

// Isomorphism by trying every bijection.
inline bool isomorphic_brute(const LabeledTree& a, const LabeledTree& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> da, db;
  for (Vertex v = 0; v < n; ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, w] : a.edges())
      if (!b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(w)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every labeled tree in which each vertex i >= 1 has a parent p[i] < i.
// Any tree admits such a labeling (BFS order), so deduplicating by code
// yields every isomorphism class.
template <class Visit>
void for_each_recursive_tree(int n, Visit&& visit) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges(static_cast<std::size_t>(n - 1));
  for (;;) {
    for (int i = 1; i < n; ++i) edges[static_cast<std::size_t>(i - 1)] = {parent[static_cast<std::size_t>(i)], i};
    visit(LabeledTree(n, edges));
    int i = n - 1;
    while (i >= 1 && parent[static_cast<std::size_t>(i)] == i - 1) parent[static_cast<std::size_t>(i--)] = 0;
    if (i < 1) return;
    ++parent[static_cast<std::size_t>(i)];
  }
}

inline std::set<std::string> oracle_codes(int n) {
  std::set<std::string> codes;
  for_each_recursive_tree(n, [&](const LabeledTree& t) { codes.insert(bcast::canonical_code(t).code); });
  return codes;
}

}  // namespace fixtures
