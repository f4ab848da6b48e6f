#pragma once

/*
 * Exact containment test for linear forests: does G have vertex-disjoint
 * paths of orders k1, ..., km? Backtracking over bit rows, one path at a
 * time, longest first, growing each path from one endpoint.
 *
 * Pruning:
 *  - remaining free vertices must cover the remaining demand;
 *  - every unplaced path needs a free component at least its order, and
 *    the components large enough for the smallest unplaced path must hold
 *    the whole remaining demand;
 *  - the open path needs enough free vertices reachable from its end;
 *  - twin vertices (N(u)\{v} == N(v)\{u}) that are both free are
 *    interchangeable, so only one per twin class is branched on.
 */

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/forest.hpp"
#include "turan/graph.hpp"

namespace turan {

struct SearchBudget {
  std::uint64_t node_limit = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// One vertex sequence per forest component, in the forest's order.
struct Witness {
  std::vector<std::vector<int>> paths;
};

struct ContainResult {
  bool contains = false;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

/// Checks disjointness, adjacency along each path and the requested orders.
inline bool witness_valid(const Graph& g, const PathForest& forest,
                          const Witness& w) {
  if (static_cast<int>(w.paths.size()) != forest.size()) return false;
  Row used = 0;
  for (int i = 0; i < forest.size(); ++i) {
    const auto& p = w.paths[i];
    if (static_cast<int>(p.size()) != forest[i]) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const int v = p[j];
      if (v < 0 || v >= g.order() || (used & bit(v))) return false;
      used |= bit(v);
      if (j > 0 && !g.adjacent(p[j - 1], v)) return false;
    }
  }
  return true;
}

inline void write_witness(std::ostream& out, const Witness& w) {
  for (const auto& p : w.paths) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << p[j];
    out << '\n';
  }
}

/// Twin class id per vertex; equal ids are interchangeable by an automorphism.
inline std::vector<int> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (cls[u] != -1) continue;
    cls[u] = next;
    for (int v = u + 1; v < n; ++v) {
      if (cls[v] != -1) continue;
      const Row mask = ~(bit(u) | bit(v));
      if ((g.row(u) & mask) == (g.row(v) & mask)) cls[v] = next;
    }
    ++next;
  }
  return cls;
}

namespace detail {

class SearchBase {
 protected:
  SearchBase(const Graph& g, const SearchBudget& budget)
      : g_(g), budget_(budget), twin_(twin_classes(g)) {
    if (budget.node_limit < 1) throw ArgumentError("node_limit must be >= 1");
    if (budget.time_limit) deadline_ = Clock::now() + *budget.time_limit;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) throw BudgetExhausted(nodes_);
    if (deadline_ && (nodes_ & 0xFFF) == 0 && Clock::now() > *deadline_)
      throw BudgetExhausted(nodes_);
  }

  /// One representative per twin class among `cands`.
  Row twin_representatives(Row cands) const {
    Row out = 0;
    std::uint64_t seen = 0;  // twin ids are < 62
    for (Row r = cands; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint64_t mark = std::uint64_t{1} << twin_[v];
      if (seen & mark) continue;
      seen |= mark;
      out |= bit(v);
    }
    return out;
  }

  /// Vertices of `within` reachable from `from`'s neighbours inside `within`.
  Row reach(int from, Row within) const {
    Row comp = g_.row(from) & within;
    Row frontier = comp;
    while (frontier != 0) {
      Row next = 0;
      for (Row r = frontier; r != 0; r &= r - 1) next |= g_.row(std::countr_zero(r));
      frontier = next & within & ~comp;
      comp |= frontier;
    }
    return comp;
  }

  /// Sizes of the components of G[free], largest first.
  std::vector<int> free_components(Row free) const {
    std::vector<int> sizes;
    while (free != 0) {
      const int v = std::countr_zero(free);
      const Row comp = reach(v, free) | bit(v);
      sizes.push_back(std::popcount(comp));
      free &= ~comp;
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
  }

  using Clock = std::chrono::steady_clock;
  const Graph& g_;
  SearchBudget budget_;
  std::vector<int> twin_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
};

class ForestSearch : SearchBase {
 public:
  ForestSearch(const Graph& g, const PathForest& forest, const SearchBudget& budget)
      : SearchBase(g, budget), orders_(forest.orders()) {
    suffix_.assign(orders_.size() + 1, 0);
    for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i)
      suffix_[i] = suffix_[i + 1] + orders_[i];
    paths_.resize(orders_.size());
  }

  ContainResult run() {
    ContainResult out;
    out.contains = start_path(0, g_.vertices().bits);
    out.nodes = nodes_;
    if (out.contains) out.witness = Witness{paths_};
    return out;
  }

 private:
  bool feasible(std::size_t idx, Row free) const {
    if (std::popcount(free) < suffix_[idx]) return false;
    const std::vector<int> comps = free_components(free);
    if (comps.front() < orders_[idx]) return false;
    const int smallest = orders_.back();
    int room = 0;
    for (int c : comps)
      if (c >= smallest) room += c;
    return room >= suffix_[idx];
  }

  bool start_path(std::size_t idx, Row free) {
    if (idx == orders_.size()) return true;
    tick();
    if (!feasible(idx, free)) return false;
    const int k = orders_[idx];
    Row starts = free;
    if (k >= 2) {
      Row with_free_nbr = 0;
      for (Row r = free; r != 0; r &= r - 1) {
        const int v = std::countr_zero(r);
        if (g_.row(v) & free) with_free_nbr |= bit(v);
      }
      starts = with_free_nbr;
    }
    for (Row r = twin_representatives(starts); r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      paths_[idx].assign(1, v);
      if (extend(idx, free & ~bit(v))) return true;
    }
    paths_[idx].clear();
    return false;
  }

  bool extend(std::size_t idx, Row free) {
    auto& path = paths_[idx];
    const int need = orders_[idx] - static_cast<int>(path.size());
    if (need == 0) return start_path(idx + 1, free);
    tick();
    const int end = path.back();
    const Row cands = g_.row(end) & free;
    if (cands == 0) return false;
    if (std::popcount(reach(end, free)) < need) return false;
    for (Row r = twin_representatives(cands); r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      path.push_back(v);
      if (extend(idx, free & ~bit(v))) return true;
      path.pop_back();
    }
    return false;
  }

  std::vector<int> orders_;
  std::vector<int> suffix_;
  std::vector<std::vector<int>> paths_;
};

class LongestPathSearch : SearchBase {
 public:
  LongestPathSearch(const Graph& g, const SearchBudget& budget)
      : SearchBase(g, budget) {}

  int run() {
    const int n = g_.order();
    if (n == 0) return 0;
    best_ = 1;
    for (Row r = twin_representatives(g_.vertices().bits); r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      grow(v, 1, g_.vertices().bits & ~bit(v));
      if (best_ == n) break;
    }
    return best_;
  }

 private:
  void grow(int end, int length, Row free) {
    tick();
    best_ = std::max(best_, length);
    const Row reachable = reach(end, free);
    if (length + std::popcount(reachable) <= best_) return;
    for (Row r = twin_representatives(g_.row(end) & free); r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      grow(v, length + 1, free & ~bit(v));
      if (best_ == g_.order()) return;
    }
  }

  int best_ = 0;
};

}  // namespace detail

/// Exact: either a validated witness or a proof by exhaustion that none exists.
/// Throws BudgetExhausted rather than guessing.
inline ContainResult contains_forest(const Graph& g, const PathForest& forest,
                                     const SearchBudget& budget = {}) {
  if (forest.total() > kMaxVertices)
    throw ArgumentError("forest needs more than 62 vertices");
  if (forest.total() > g.order()) return ContainResult{false, std::nullopt, 0};
  ContainResult res = detail::ForestSearch(g, forest, budget).run();
  if (res.contains && !witness_valid(g, forest, *res.witness))
    throw InternalInconsistency("detector produced an invalid witness");
  return res;
}

/// Maximum order of a path subgraph; 0 for the empty graph.
inline int longest_path(const Graph& g, const SearchBudget& budget = {}) {
  return detail::LongestPathSearch(g, budget).run();
}

/// Freeness certificate: the negation of contains_forest plus statistics.
struct FreeCertificate {
  PathForest forest;
  bool free = false;
  std::uint64_t nodes = 0;
  std::optional<Witness> witness;
};

inline FreeCertificate free_check(const Graph& g, const PathForest& forest,
                                  const SearchBudget& budget = {}) {
  ContainResult r = contains_forest(g, forest, budget);
  return FreeCertificate{forest, !r.contains, r.nodes, std::move(r.witness)};
}

/// Key/value text record: forest=..., free=..., nodes=..., witness=a-b-c|d-e.
inline std::string to_record(const FreeCertificate& c) {
  std::string out = "forest=" + c.forest.to_string() +
                    " free=" + (c.free ? "true" : "false") +
                    " nodes=" + std::to_string(c.nodes);
  if (c.witness) {
    out += " witness=";
    for (std::size_t i = 0; i < c.witness->paths.size(); ++i) {
      if (i) out += '|';
      const auto& p = c.witness->paths[i];
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j) out += '-';
        out += std::to_string(p[j]);
      }
    }
  }
  return out;
}

}  // namespace turan
