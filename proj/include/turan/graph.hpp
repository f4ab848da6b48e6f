#pragma once

/*
 * Undirected simple graphs on at most 62 vertices. Each vertex owns one
 * 64-bit adjacency row; bit u of row v is set iff {u,v} is an edge.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

inline constexpr int kMaxVertices = 62;

using Row = std::uint64_t;

constexpr Row bit(int v) { return Row{1} << v; }
constexpr Row low_bits(int n) { return n >= 64 ? ~Row{0} : bit(n) - 1; }

/// A set of vertices of some host graph, as a single bit row.
struct VertexSet {
  Row bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Row b) : bits(b) {}

  static constexpr VertexSet range(int first, int last) {
    return VertexSet(low_bits(last) & ~low_bits(first));
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.bits |= bit(v);
    return s;
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool operator==(const VertexSet&) const = default;
};

struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0) throw ArgumentError("negative vertex count");
    if (n > kMaxVertices)
      throw CapacityError("graph on " + std::to_string(n) +
                          " vertices exceeds capacity " +
                          std::to_string(kMaxVertices));
  }

  int order() const { return n_; }
  Row row(int v) const { return rows_[v]; }
  VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
  VertexSet vertices() const { return VertexSet(low_bits(n_)); }
  int degree(int v) const { return std::popcount(rows_[v]); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
  void add_edge(Edge e) { add_edge(e.u, e.v); }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (Row r = rows_[u] & ~low_bits(u + 1); r != 0; r &= r - 1)
        out.emplace_back(u, std::countr_zero(r));
    return out;
  }

  /// Symmetric, loop-free, nothing set beyond the vertex count.
  bool well_formed() const {
    const Row mask = low_bits(n_);
    for (int v = 0; v < kMaxVertices; ++v) {
      if (v >= n_) {
        if (rows_[v] != 0) return false;
        continue;
      }
      if ((rows_[v] & ~mask) != 0 || adjacent(v, v)) return false;
      for (Row r = rows_[v]; r != 0; r &= r - 1)
        if (!adjacent(std::countr_zero(r), v)) return false;
    }
    return true;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw ArgumentError("vertex out of range");
    if (u == v) throw ArgumentError("loops are not allowed");
  }

  int n_ = 0;
  std::array<Row, kMaxVertices> rows_{};
};

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

inline int edge_count(const Graph& g) { return g.edge_count(); }

/// G ∪ H with H relabelled by offset |G|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (Edge e : g.edges()) out.add_edge(e);
  for (Edge e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
  return out;
}

/// G + H: the disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

/// G[S], vertices renumbered in increasing order of their host labels.
inline Graph induced(const Graph& g, VertexSet s) {
  if ((s.bits & ~g.vertices().bits) != 0)
    throw ArgumentError("induced: vertex set exceeds host graph");
  std::vector<int> keep;
  for (Row r = s.bits; r != 0; r &= r - 1) keep.push_back(std::countr_zero(r));
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

/// e(S1, S2) for disjoint S1, S2.
inline int edges_between(const Graph& g, VertexSet s1, VertexSet s2) {
  if ((s1.bits & s2.bits) != 0)
    throw ArgumentError("edges_between: vertex sets overlap");
  const Row host = g.vertices().bits;
  if (((s1.bits | s2.bits) & ~host) != 0)
    throw ArgumentError("edges_between: vertex set exceeds host graph");
  int count = 0;
  for (Row r = s1.bits; r != 0; r &= r - 1)
    count += std::popcount(g.row(std::countr_zero(r)) & s2.bits);
  return count;
}

/// Relabel so that vertex perm[i] of g becomes vertex i of the result.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw ArgumentError("relabel: permutation size mismatch");
  std::vector<int> where(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 0 || perm[i] >= g.order() || where[perm[i]] != -1)
      throw ArgumentError("relabel: not a permutation");
    where[perm[i]] = static_cast<int>(i);
  }
  Graph out(g.order());
  for (Edge e : g.edges()) out.add_edge(where[e.u], where[e.v]);
  return out;
}

/// Sizes of connected components, largest first.
inline std::vector<int> component_sizes(const Graph& g) {
  std::vector<int> sizes;
  Row left = g.vertices().bits;
  while (left != 0) {
    Row comp = left & -left;
    Row frontier = comp;
    while (frontier != 0) {
      Row next = 0;
      for (Row r = frontier; r != 0; r &= r - 1)
        next |= g.row(std::countr_zero(r));
      frontier = next & ~comp;
      comp |= frontier;
    }
    sizes.push_back(std::popcount(comp));
    left &= ~comp;
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace turan
