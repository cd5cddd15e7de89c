#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bcast/broadcast.hpp"
#include "bcast/tree.hpp"

namespace bcast {

/// Edge-list text: first meaningful line is n, then one `u v` pair per
/// line. Blank lines and lines starting with '#' are skipped.
LabeledTree parse_edge_list(std::string_view text);
std::string format_edge_list(const LabeledTree& t);

/// graph6 (the nauty/McKay ASCII encoding). Decoding rejects graphs that
/// are not trees.
LabeledTree parse_graph6(std::string_view text);
std::string format_graph6(const LabeledTree& t);

/// Graphviz DOT; with a broadcast, positive vertices are labelled `v:f(v)`
/// and filled.
std::string format_dot(const LabeledTree& t, const std::optional<Broadcast>& f = std::nullopt);

enum class TreeFormat { EdgeList, Graph6 };

LabeledTree parse_tree(std::string_view text, TreeFormat format);
std::string read_text_file(const std::string& path);

}  // namespace bcast
