#include "bcast/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace bcast {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<long> read_ints(std::string_view line, int lineno) {
  std::vector<long> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k == line.size()) break;
    long x = 0;
    auto [ptr, ec] = std::from_chars(line.data() + k, line.data() + line.size(), x);
    if (ec != std::errc() || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw InputError("edge list line " + std::to_string(lineno) + ": expected integers");
    out.push_back(x);
    k = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

LabeledTree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = strip(raw);
    if (line.empty() || line.front() == '#') continue;
    auto ints = read_ints(line, lineno);
    if (n < 0) {
      if (ints.size() != 1) throw InputError("edge list line " + std::to_string(lineno) + ": expected vertex count");
      n = ints[0];
      if (n < 2 || n > 1'000'000) throw InputError("edge list: vertex count " + std::to_string(n) + " out of range");
      continue;
    }
    if (ints.size() != 2) throw InputError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    edges.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
  }
  if (n < 0) throw InputError("edge list: missing vertex count");
  return LabeledTree(static_cast<int>(n), edges);
}

std::string format_edge_list(const LabeledTree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (auto [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

LabeledTree parse_graph6(std::string_view text) {
  text = strip(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  for (char c : text)
    if (c < 63 || c > 126) throw InputError("graph6: byte outside 63..126");

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    long v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= text.size()) throw InputError("graph6: truncated size field");
      v = (v << 6) | (text[pos++] - 63);
    }
    return v;
  };
  long n = 0;
  if (text.empty()) throw InputError("graph6: empty input");
  if (text[0] != 126) {
    n = take6(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take6(3);
  } else {
    pos += 2;
    n = take6(6);
  }
  if (n < 2 || n > 1'000'000) throw InputError("graph6: vertex count " + std::to_string(n) + " out of range");

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw InputError("graph6: expected " + std::to_string(need) + " data bytes, got " + std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        if (static_cast<long>(edges.size()) >= n) throw InputError("graph6: too many edges for a tree");
        edges.emplace_back(i, j);
      }
    }
  }
  if (k % 6 != 0) {
    int byte = text.back() - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw InputError("graph6: nonzero padding bits");
  }
  return LabeledTree(static_cast<int>(n), edges);
}

std::string format_graph6(const LabeledTree& t) {
  const long n = t.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (t.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

std::string format_dot(const LabeledTree& t, const std::optional<Broadcast>& f) {
  std::string out = "graph T {\n";
  for (Vertex v = 0; v < t.order(); ++v) {
    out += "  " + std::to_string(v);
    if (f && (*f)[v] > 0)
      out += " [label=\"" + std::to_string(v) + ":" + std::to_string((*f)[v]) + "\", style=filled, fillcolor=lightblue]";
    out += ";\n";
  }
  for (auto [u, v] : t.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

LabeledTree parse_tree(std::string_view text, TreeFormat format) {
  return format == TreeFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bcast
