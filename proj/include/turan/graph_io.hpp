#pragma once

// graph6 (n <= 62), a plain edge-list format, and write-only DOT.

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {

namespace detail {
inline constexpr int kG6Bias = 63;
inline constexpr int kG6Max = 126;
}  // namespace detail

/*
 * graph6 body layout: the upper triangle of the adjacency matrix read
 * column by column, i.e. (0,1),(0,2),(1,2),(0,3),... , packed big-endian
 * into 6-bit groups, each group biased by 63, zero-padded at the end.
 * Only the single-byte header (n <= 62) is supported.
 */
inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + detail::kG6Bias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kG6Bias));
  return out;
}

inline Graph read_graph6(std::string_view line) {
  // Tolerate a trailing newline / carriage return.
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line", 0);

  auto value_at = [&](std::size_t pos) {
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < detail::kG6Bias || c > detail::kG6Max)
      throw ParseError("graph6: byte " + std::to_string(c) +
                           " outside 63..126",
                       pos);
    return c - detail::kG6Bias;
  };

  if (static_cast<unsigned char>(line[0]) == detail::kG6Max)
    throw ParseError("graph6: multi-byte header (n > 62) not supported", 0);
  const int n = value_at(0);
  if (n > kMaxVertices)
    throw ParseError("graph6: n = " + std::to_string(n) + " exceeds 62", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body)
    throw ParseError("graph6: truncated bit section (expected " +
                         std::to_string(body) + " bytes)",
                     line.size());
  if (line.size() > 1 + body)
    throw ParseError("graph6: trailing bytes after bit section", 1 + body);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = value_at(1 + k / 6);
      if ((group >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = value_at(body);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0)
      throw ParseError("graph6: nonzero padding bits", body);
  }
  return g;
}

/*
 * Edge list: one "u v" pair per line, 0-based; '#' starts a comment.
 * A line "# order N" fixes the vertex count (so isolated vertices survive
 * a round trip); otherwise the count is one past the largest label.
 */
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int order = 0;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      std::istringstream comment(std::string(view.substr(hash + 1)));
      std::string key;
      int value = 0;
      if (comment >> key && key == "order" && comment >> value) {
        if (value < 0 || value > kMaxVertices)
          throw ParseError("edge list: order out of range", line_start);
        order = std::max(order, value);
      }
      view = view.substr(0, hash);
    }
    std::istringstream fields{std::string(view)};
    long u = 0;
    long v = 0;
    if (!(fields >> u)) {
      std::string rest;
      fields.clear();
      if (fields >> rest)
        throw ParseError("edge list: expected vertex index", line_start);
      continue;
    }
    if (!(fields >> v))
      throw ParseError("edge list: edge needs two endpoints", line_start);
    std::string extra;
    if (fields >> extra)
      throw ParseError("edge list: trailing tokens", line_start);
    if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices)
      throw ParseError("edge list: vertex index out of range", line_start);
    if (u == v) throw ParseError("edge list: loop", line_start);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    order = std::max<int>(order, static_cast<int>(std::max(u, v)) + 1);
  }
  Graph g(order);
  for (Edge e : edges) g.add_edge(e);
  return g;
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# order " << g.order() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_dot(std::ostream& out, const Graph& g,
                      std::string_view name = {}) {
  out << "graph";
  if (!name.empty()) out << ' ' << name;
  out << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (Edge e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

}  // namespace turan
