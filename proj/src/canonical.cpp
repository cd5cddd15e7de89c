#include "bcast/canonical.hpp"

#include <algorithm>

namespace bcast {

namespace {

std::string encode(const LabeledTree& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbours(v))
    if (w != parent) kids.push_back(encode(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

}  // namespace

std::string rooted_code(const LabeledTree& t, Vertex root) { return encode(t, root, -1); }

std::vector<Vertex> tree_centers(const LabeledTree& t) {
  const int n = t.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbours(v))
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalCode canonical_code(const LabeledTree& t) {
  auto centers = tree_centers(t);
  if (centers.size() == 1) return {rooted_code(t, centers[0])};
  // Bicentral: root at either end of the central edge.
  return {std::min(rooted_code(t, centers[0]), rooted_code(t, centers[1]))};
}

LabeledTree tree_from_code(const CanonicalCode& c) {
  const std::string& s = c.code;
  if (s.size() < 4 || s.front() != '(') throw InputError("canonical code too short or malformed");
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') {
      if (k > 0 && stack.empty()) throw InputError("canonical code has more than one root");
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else if (s[k] == ')') {
      if (stack.empty()) throw InputError("unbalanced canonical code");
      stack.pop_back();
    } else {
      throw InputError("canonical code contains a character other than parentheses");
    }
  }
  if (!stack.empty()) throw InputError("unbalanced canonical code");
  return LabeledTree(next, edges);
}

}  // namespace bcast
