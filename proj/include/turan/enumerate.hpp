#pragma once

/*
 * One representative per isomorphism class of graphs on n <= 10 vertices,
 * by orderly generation.
 *
 * The code of a labelled graph is its graph6 bit sequence: columns
 * j = 1..n-1, each column listing rows 0..j-1. A graph is canonical when no
 * relabelling yields a lexicographically larger code. Deleting the last
 * vertex of a canonical graph leaves a canonical graph (its code is a
 * prefix), so every canonical graph on n vertices arises from a canonical
 * graph on n-1 vertices by appending one column; appending every possible
 * column and keeping the canonical results lists each class exactly once.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/detector.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr int kMaxEnumerationOrder = 10;

namespace detail {

class CanonicityTest {
 public:
  explicit CanonicityTest(const Graph& g) : g_(g), n_(g.order()), twin_(twin_classes(g)) {
    for (int j = 0; j < n_; ++j) own_[j] = column(j, [](int i) { return i; }, j);
  }

  /// True iff no relabelling gives a larger code.
  bool run() {
    if (n_ <= 1) return true;
    return !search(0, 0);
  }

 private:
  // Column `pos` of the relabelled graph when vertex v sits at position pos.
  template <class Map>
  std::uint32_t column(int pos, Map&& at, int v) const {
    std::uint32_t col = 0;
    for (int i = 0; i < pos; ++i)
      col = (col << 1) | (g_.adjacent(at(i), v) ? 1U : 0U);
    return col;
  }

  // Returns true if a strictly larger code exists below this node.
  bool search(int pos, Row used) {
    if (pos == n_) return false;
    std::uint64_t seen = 0;
    for (int v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      const std::uint64_t mark = std::uint64_t{1} << twin_[v];
      if (seen & mark) continue;
      seen |= mark;
      const std::uint32_t col = column(pos, [this](int i) { return perm_[i]; }, v);
      if (col > own_[pos]) return true;
      if (col < own_[pos]) continue;
      perm_[pos] = v;
      if (search(pos + 1, used | bit(v))) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> twin_;
  std::uint32_t own_[kMaxEnumerationOrder + 1] = {};
  int perm_[kMaxEnumerationOrder + 1] = {};
};

}  // namespace detail

inline bool is_canonical(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder)
    throw ScaleRefusal("canonicity test limited to 10 vertices");
  return detail::CanonicityTest(g).run();
}

/// Upper-triangle bits in graph6 order, packed into one word (n <= 11).
inline std::uint64_t pack_code(const Graph& g) {
  std::uint64_t code = 0;
  int k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << k;
  return code;
}

inline Graph unpack_code(int n, std::uint64_t code) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1U) g.add_edge(i, j);
  return g;
}

/// Canonical children of a canonical parent: append a vertex adjacent to
/// each subset of the parent's vertices, keep the canonical results.
template <class Visitor>
void for_each_canonical_child(const Graph& parent, Visitor&& visit) {
  const int m = parent.order();
  if (m + 1 > kMaxEnumerationOrder)
    throw ScaleRefusal("enumeration limited to 10 vertices");
  for (Row nbrs = 0; nbrs < bit(m); ++nbrs) {
    Graph child(m + 1);
    for (const Edge& e : parent.edges()) child.add_edge(e);
    for (Row r = nbrs; r != 0; r &= r - 1) child.add_edge(std::countr_zero(r), m);
    if (is_canonical(child)) visit(child);
  }
}

/// Packed codes of the canonical representatives on n vertices.
inline std::vector<std::uint64_t> canonical_codes(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw ScaleRefusal("enumeration supports 1 <= n <= 10, got " + std::to_string(n));
  std::vector<std::uint64_t> level{0};
  for (int m = 1; m < n; ++m) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : level)
      for_each_canonical_child(unpack_code(m, code),
                               [&](const Graph& c) { next.push_back(pack_code(c)); });
    level = std::move(next);
  }
  return level;
}

/// Visits one representative of every isomorphism class on n vertices and
/// returns the number of classes.
inline std::uint64_t enumerate_nonisomorphic(int n,
                                             const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw ScaleRefusal("enumeration supports 1 <= n <= 10, got " + std::to_string(n));
  std::uint64_t count = 0;
  if (n == 1) {
    visit(Graph(1));
    return 1;
  }
  for (std::uint64_t code : canonical_codes(n - 1))
    for_each_canonical_child(unpack_code(n - 1, code), [&](const Graph& g) {
      ++count;
      visit(g);
    });
  return count;
}

}  // namespace turan
