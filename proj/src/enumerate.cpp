#include "bcast/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "bcast/spine.hpp"

namespace bcast {

void for_each_rooted_tree(int n, const std::function<void(const std::vector<Vertex>&)>& visit) {
  if (n < 1) return;
  // Beyer-Hedetniemi successor on level sequences (root at level 1).
  std::vector<int> level(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) level[static_cast<std::size_t>(k)] = k + 1;
  std::vector<Vertex> parent(static_cast<std::size_t>(n - 1));
  std::vector<Vertex> last_at(static_cast<std::size_t>(n + 2), -1);
  for (;;) {
    last_at[1] = 0;
    for (int k = 1; k < n; ++k) {
      int l = level[static_cast<std::size_t>(k)];
      parent[static_cast<std::size_t>(k - 1)] = last_at[static_cast<std::size_t>(l - 1)];
      last_at[static_cast<std::size_t>(l)] = k;
    }
    visit(parent);

    int p = n - 1;
    while (p > 0 && level[static_cast<std::size_t>(p)] == 2) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
    for (int k = p; k < n; ++k) level[static_cast<std::size_t>(k)] = level[static_cast<std::size_t>(k - p + q)];
  }
}

std::vector<LabeledTree> enumerate_trees(int n, bool caterpillars_only, const EnumerationLimits& limits) {
  if (n > limits.max_tree_order)
    throw CapExceeded("enumeration order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.max_tree_order));
  if (n < 2) throw InputError("trees need at least 2 vertices");
  std::map<CanonicalCode, LabeledTree> classes;
  for_each_rooted_tree(n, [&](const std::vector<Vertex>& parent) {
    LabeledTree t = tree_from_parents(parent);
    if (caterpillars_only && !is_caterpillar(t)) return;
    classes.try_emplace(canonical_code(t), std::move(t));
  });
  std::vector<LabeledTree> out;
  out.reserve(classes.size());
  for (auto& [code, t] : classes) out.push_back(std::move(t));
  return out;
}

void for_each_subtree(const LabeledTree& t, const std::function<void(const Subtree&)>& visit,
                      const EnumerationLimits& limits) {
  const int n = t.order();
  if (n > limits.max_subtree_host_order || n > 31)
    throw CapExceeded("subtree enumeration host order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.max_subtree_host_order));
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : t.neighbours(v)) nbr[static_cast<std::size_t>(v)] |= 1u << w;

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    // Flood fill from the lowest vertex inside the mask.
    std::uint32_t seen = mask & (~mask + 1);
    for (std::uint32_t frontier = seen; frontier;) {
      std::uint32_t grow = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) grow |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
      grow &= mask & ~seen;
      seen |= grow;
      frontier = grow;
    }
    if (seen != mask) continue;
    std::vector<Vertex> vs;
    for (std::uint32_t f = mask; f; f &= f - 1) vs.push_back(std::countr_zero(f));
    auto sub = induced_subtree(t, vs);
    visit(Subtree{std::move(sub.tree), std::move(sub.label_map)});
  }
}

std::vector<Subtree> enumerate_subtrees(const LabeledTree& t, const EnumerationLimits& limits) {
  std::vector<Subtree> out;
  for_each_subtree(t, [&](const Subtree& s) { out.push_back(s); }, limits);
  return out;
}

}  // namespace bcast
