#include "bcast/broadcast.hpp"

#include <charconv>
#include <numeric>

namespace bcast {

namespace {

void validate(std::span<const int> values, const MetricSummary& m) {
  if (static_cast<int>(values.size()) != m.n)
    throw InputError("broadcast has " + std::to_string(values.size()) + " entries for a tree on " +
                     std::to_string(m.n) + " vertices");
  for (Vertex v = 0; v < m.n; ++v) {
    int x = values[static_cast<std::size_t>(v)];
    if (x < 0) throw InputError("broadcast value at vertex " + std::to_string(v) + " is negative");
    if (x > m.eccentricity(v))
      throw InputError("broadcast value " + std::to_string(x) + " at vertex " + std::to_string(v) +
                       " exceeds its eccentricity " + std::to_string(m.eccentricity(v)));
  }
}

int parse_int(std::string_view s, std::string_view what) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("broadcast text: bad " + std::string(what) + " '" + std::string(s) + "'");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Broadcast::Broadcast(const MetricSummary& m, std::vector<int> values) : values_(std::move(values)) {
  validate(values_, m);
}

Broadcast::Broadcast(const LabeledTree& t, std::vector<int> values) : Broadcast(metric_summary(t), std::move(values)) {}

int Broadcast::cost() const { return std::accumulate(values_.begin(), values_.end(), 0); }

std::vector<Vertex> Broadcast::broadcast_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (values_[static_cast<std::size_t>(v)] > 0) out.push_back(v);
  return out;
}

std::string format_broadcast(const Broadcast& f) {
  std::string out;
  for (Vertex v : f.broadcast_vertices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v) + ':' + std::to_string(f[v]);
  }
  return out;
}

Broadcast parse_broadcast(std::string_view text, const MetricSummary& m) {
  std::vector<int> values(static_cast<std::size_t>(m.n), 0);
  std::vector<char> given(static_cast<std::size_t>(m.n), 0);
  text = trim(text);
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw InputError("broadcast text: expected 'v:f(v)', got '" + std::string(item) + "'");
    int v = parse_int(trim(item.substr(0, colon)), "vertex");
    int x = parse_int(trim(item.substr(colon + 1)), "value");
    if (v < 0 || v >= m.n) throw InputError("broadcast text: vertex " + std::to_string(v) + " out of range");
    if (given[static_cast<std::size_t>(v)]) throw InputError("broadcast text: vertex " + std::to_string(v) + " repeated");
    given[static_cast<std::size_t>(v)] = 1;
    values[static_cast<std::size_t>(v)] = x;
  }
  return Broadcast(m, std::move(values));
}

}  // namespace bcast
