#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcast/metrics.hpp"
#include "bcast/tree.hpp"

namespace bcast {

/// A broadcast f: V -> {0..diam} with f(v) <= ecc(v).
///
/// The eccentricity caps are checked once, at construction; every other
/// operation trusts them.
class Broadcast {
 public:
  /// Throws InputError naming the first vertex whose value is negative or
  /// exceeds its eccentricity.
  Broadcast(const MetricSummary& m, std::vector<int> values);
  Broadcast(const LabeledTree& t, std::vector<int> values);

  static Broadcast zero(int n) { return Broadcast(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int order() const { return static_cast<int>(values_.size()); }
  int operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  std::span<const int> values() const { return values_; }

  int cost() const;
  std::vector<Vertex> broadcast_vertices() const;

  friend bool operator==(const Broadcast&, const Broadcast&) = default;

 private:
  explicit Broadcast(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

/// `v:f(v)` pairs for the positive entries, comma separated, ascending
/// vertex order; the zero broadcast is the empty string.
std::string format_broadcast(const Broadcast& f);

/// Parses the text form against tree metrics. Throws InputError on syntax
/// errors, repeated vertices, or out-of-range values.
Broadcast parse_broadcast(std::string_view text, const MetricSummary& m);

}  // namespace bcast
