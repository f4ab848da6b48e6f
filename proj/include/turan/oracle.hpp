#pragma once

// Exact ex(n, F) for small n by exhausting isomorphism classes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/detector.hpp"
#include "turan/enumerate.hpp"
#include "turan/errors.hpp"
#include "turan/forest.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr int kOracleDefaultMaxOrder = 9;

struct OracleOptions {
  bool allow_long = false;  // permit n = 10
  unsigned threads = 1;
  bool seed_with_construction = true;
  bool collect_all = false;  // keep every extremal class, not just one
};

struct OracleResult {
  int n = 0;
  PathForest forest;
  int value = 0;
  Graph witness;
  std::uint64_t graphs_enumerated = 0;
  std::uint64_t graphs_checked = 0;  // classes that needed a detector run
  std::string seed;                  // construction that set the first incumbent
  std::vector<Graph> extremal;       // filled when collect_all is set, sorted by code
};

namespace detail {

struct Incumbent {
  int edges = -1;
  Graph graph;
  std::uint64_t enumerated = 0;
  std::uint64_t checked = 0;
  bool collect = false;
  std::vector<Graph> ties;

  void offer(const Graph& g, const PathForest& forest) {
    ++enumerated;
    const int e = g.edge_count();
    if (e < edges || (e == edges && !collect)) return;
    ++checked;
    if (contains_forest(g, forest).contains) return;
    if (e > edges) {
      edges = e;
      graph = g;
      ties.clear();
    }
    if (collect) ties.push_back(g);
  }
};

// Best certified forest-free construction on n vertices, if any applies.
inline std::optional<Construction> oracle_seed(int n, const PathForest& forest) {
  std::optional<Construction> best;
  auto consider = [&](Construction c) {
    if (best && c.predicted_edges <= best->predicted_edges) return;
    if (free_check(c.graph, forest).free) best = std::move(c);
  };
  if (forest.smallest() < 3) return best;
  Count prefix = 0;
  for (int k : forest.orders()) {
    prefix += k;
    for (Construction& c : clique_union_family(n, prefix, k)) consider(std::move(c));
  }
  const Count s = forest.half_sum();
  const Count c = forest.all_odd() ? 1 : 0;
  if (s >= 1 && n >= s + c) consider(forest_join(n, forest));
  return best;
}

}  // namespace detail

/*
 * Maximum edge count over all forest-free graphs on n vertices. Classes are
 * only tested when they could beat the incumbent. With several threads the
 * parent classes are dealt round-robin to workers; each worker keeps its own
 * incumbent and the results are merged at the end (ties go to the lowest
 * worker, so output depends only on the thread count).
 */
inline OracleResult oracle_ex(int n, const PathForest& forest,
                              const OracleOptions& opts = {}) {
  if (n < 1) throw ArgumentError("oracle_ex needs n >= 1");
  if (n > kMaxEnumerationOrder)
    throw ScaleRefusal("oracle_ex: n = " + std::to_string(n) +
                       " is beyond exhaustive enumeration (max 10)");
  if (n > kOracleDefaultMaxOrder && !opts.allow_long)
    throw ScaleRefusal("oracle_ex: n = " + std::to_string(n) +
                       " needs the long-run flag");

  OracleResult out;
  out.n = n;
  out.forest = forest;

  detail::Incumbent seed;
  seed.collect = opts.collect_all;
  if (opts.seed_with_construction) {
    if (auto c = detail::oracle_seed(n, forest)) {
      seed.edges = c->graph.edge_count();
      seed.graph = c->graph;
      out.seed = c->name;
    }
  }

  std::vector<detail::Incumbent> workers;
  if (n == 1) {
    workers.push_back(seed);
    workers.back().offer(Graph(1), forest);
  } else {
    const std::vector<std::uint64_t> parents = canonical_codes(n - 1);
    const unsigned count = std::max(1U, std::min<unsigned>(opts.threads, parents.size()));
    workers.assign(count, seed);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < parents.size(); i += count)
        for_each_canonical_child(unpack_code(n - 1, parents[i]),
                                 [&](const Graph& g) { workers[w].offer(g, forest); });
    };
    if (count == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < count; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
  }

  const detail::Incumbent* best = &workers.front();
  for (const auto& w : workers) {
    out.graphs_enumerated += w.enumerated;
    out.graphs_checked += w.checked;
    if (w.edges > best->edges) best = &w;
  }
  if (best->edges < 0) throw InternalInconsistency("oracle found no forest-free graph");
  out.value = best->edges;
  out.witness = best->graph;
  if (opts.collect_all) {
    for (const auto& w : workers)
      if (w.edges == best->edges)
        out.extremal.insert(out.extremal.end(), w.ties.begin(), w.ties.end());
    std::sort(out.extremal.begin(), out.extremal.end(),
              [](const Graph& a, const Graph& b) { return pack_code(a) < pack_code(b); });
  }
  if (out.witness.edge_count() != out.value || !free_check(out.witness, forest).free)
    throw InternalInconsistency("oracle witness failed re-certification");
  return out;
}

}  // namespace turan
