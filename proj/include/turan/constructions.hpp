#pragma once

/*
 * Extremal graph families for path forests. Every builder checks its edge
 * count against the matching closed form, and the family builders also
 * certify forest-freeness with the detector before returning.
 */

#include <string>
#include <vector>

#include "turan/detector.hpp"
#include "turan/errors.hpp"
#include "turan/forest.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"

namespace turan {

/// A constructed graph with the closed-form value it is meant to attain.
struct Construction {
  std::string name;
  Graph graph;
  Count predicted_edges = 0;
};

namespace detail {

inline void check_capacity(Count n) {
  if (n < 0) throw ArgumentError("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("construction needs " + std::to_string(n) +
                        " vertices, capacity is " + std::to_string(kMaxVertices));
}

inline Construction checked(std::string name, Graph g, Count predicted) {
  if (!g.well_formed())
    throw InternalInconsistency(name + ": malformed adjacency");
  if (g.edge_count() != predicted)
    throw InternalInconsistency(name + ": built " + std::to_string(g.edge_count()) +
                                " edges, predicted " + std::to_string(predicted));
  return Construction{std::move(name), std::move(g), predicted};
}

inline void certify_free(const Construction& c, const PathForest& forest) {
  if (!free_check(c.graph, forest).free)
    throw InternalInconsistency(c.name + " is not " + forest.to_string() +
                                "-free");
}

inline Graph cliques(int count, int size) {
  Graph g(0);
  for (int i = 0; i < count; ++i) g = disjoint_union(g, complete(size));
  return g;
}

}  // namespace detail

/// t K_{k-1} ∪ K_r with n = t(k-1) + r, 0 <= r < k-1.
inline Construction extremal_path_cliques(Count n, Count k) {
  if (k < 3) throw DomainError("extremal_path_cliques needs k >= 3");
  detail::check_capacity(n);
  const int t = static_cast<int>(n / (k - 1));
  const int r = static_cast<int>(n % (k - 1));
  Graph g = disjoint_union(detail::cliques(t, static_cast<int>(k - 1)), complete(r));
  return detail::checked(std::to_string(t) + "K" + std::to_string(k - 1) + "+K" +
                             std::to_string(r),
                         std::move(g), bracket_nml(n, k, k));
}

/// ((t-s-1) K_{k-1}) ∪ (K_{(k-2)/2} + complement(K_{k/2 + s(k-1) + r})) for
/// even k, t > 0, r in {k/2, (k-2)/2}, 0 <= s < t.
inline Construction extremal_path_special(Count n, Count k, Count s) {
  if (k < 4 || k % 2 != 0)
    throw DomainError("extremal_path_special: k must be even and >= 4");
  detail::check_capacity(n);
  const Count t = n / (k - 1);
  const Count r = n % (k - 1);
  if (t <= 0) throw DomainError("extremal_path_special: needs t > 0 (n >= k-1)");
  if (r != k / 2 && r != (k - 2) / 2)
    throw DomainError("extremal_path_special: remainder r = " + std::to_string(r) +
                      " must be k/2 or (k-2)/2");
  if (s < 0 || s >= t)
    throw DomainError("extremal_path_special: needs 0 <= s < t");
  const int hubs = static_cast<int>((k - 2) / 2);
  const int leaves = static_cast<int>(k / 2 + s * (k - 1) + r);
  Graph g = disjoint_union(detail::cliques(static_cast<int>(t - s - 1), static_cast<int>(k - 1)),
                           join(complete(hubs), empty_graph(leaves)));
  return detail::checked("special(s=" + std::to_string(s) + ")", std::move(g),
                         bracket_nml(n, k, k));
}

/// Every member of EX(n, P_k) from the two families (all admissible s).
/// The members are pairwise non-isomorphic: they differ in how many
/// K_{k-1} components they have, so no deduplication is needed.
inline std::vector<Construction> extremal_path_family(Count n, Count k) {
  std::vector<Construction> out{extremal_path_cliques(n, k)};
  if (k >= 4 && k % 2 == 0 && n >= k - 1) {
    const Count t = n / (k - 1);
    const Count r = n % (k - 1);
    if (r == k / 2 || r == (k - 2) / 2)
      for (Count s = 0; s < t; ++s) out.push_back(extremal_path_special(n, k, s));
  }
  return out;
}

/// (K_{k-3} ∪ complement(K_{n-k+2})) + K_1.
inline Construction kopylov_A(Count n, Count k) {
  if (k < 4 || n < k) throw DomainError("kopylov_A needs n >= k >= 4");
  detail::check_capacity(n);
  Graph g = join(complete(1), disjoint_union(complete(static_cast<int>(k - 3)),
                                             empty_graph(static_cast<int>(n - k + 2))));
  return detail::checked("kopylovA", std::move(g), choose2(k - 2) + (n - k + 2));
}

/// (K_{1+c} ∪ complement(K_{n-⌊(k+1)/2⌋})) + K_{⌊k/2⌋-1}, c = k mod 2.
inline Construction kopylov_B(Count n, Count k) {
  if (k < 4 || n < k) throw DomainError("kopylov_B needs n >= k >= 4");
  detail::check_capacity(n);
  const Count c = k % 2;
  Graph g = join(complete(static_cast<int>(k / 2 - 1)),
                 disjoint_union(complete(static_cast<int>(1 + c)),
                                empty_graph(static_cast<int>(n - (k + 1) / 2))));
  return detail::checked("kopylovB", std::move(g), bracket_s(n, k / 2) + c);
}

/// K_{s-1} + (K_{1+c} ∪ complement(K_{n-s-c})) with s = Σ⌊k_i/2⌋.
inline Construction forest_join(Count n, const PathForest& forest) {
  const Count s = forest.half_sum();
  const Count c = forest.all_odd() ? 1 : 0;
  if (n < s + c) throw DomainError("forest_join needs n >= s + c");
  detail::check_capacity(n);
  Graph g = join(complete(static_cast<int>(s - 1)),
                 disjoint_union(complete(static_cast<int>(1 + c)),
                                empty_graph(static_cast<int>(n - s - c))));
  return detail::checked("K" + std::to_string(s - 1) + "+(K" + std::to_string(1 + c) +
                             "+E" + std::to_string(n - s - c) + ")",
                         std::move(g), bracket_s(n, s) + c);
}

/// K_{m-1} ∪ H for each H in EX(n-m+1, P_l); n <= m-1 collapses to K_n.
inline std::vector<Construction> clique_union_family(Count n, Count m, Count l) {
  detail::check_capacity(n);
  const Count predicted = bracket_nml(n, m, l);
  if (n <= m - 1) return {detail::checked("K" + std::to_string(n), complete(static_cast<int>(n)), predicted)};
  std::vector<Construction> out;
  for (const Construction& h : extremal_path_family(n - m + 1, l))
    out.push_back(detail::checked("K" + std::to_string(m - 1) + "+" + h.name,
                                  disjoint_union(complete(static_cast<int>(m - 1)), h.graph),
                                  predicted));
  return out;
}

/*
 * Extremal graphs for 2P7, n in [14, 62]:
 *   n <= 22: K_13 ∪ H, H in EX(n-13, P7);
 *   n >= 22: K_5 + (K_2 ∪ complement(K_{n-7})).
 * Both families attain 96 edges at n = 22 and both are returned there.
 */
inline std::vector<Construction> extremal_2p7(Count n) {
  if (n < 14) throw DomainError("extremal_2p7 needs n >= 14");
  detail::check_capacity(n);
  const PathForest two_p7{7, 7};
  const Count target = ex_2p7(n).value;
  std::vector<Construction> out;
  if (n <= 22) {
    for (Construction& c : clique_union_family(n, 14, 7)) out.push_back(std::move(c));
  }
  if (n >= 22) out.push_back(forest_join(n, two_p7));
  for (const Construction& c : out) {
    if (c.predicted_edges != target)
      throw InternalInconsistency(c.name + " misses ex(n,2P7)");
    detail::certify_free(c, two_p7);
  }
  return out;
}

/// The conjectured extremal graphs for a forest: K_{Σ_{i<=j} k_i - 1} ∪ H
/// for each prefix j, then the join K_{s-1} + (K_{1+c} ∪ independent set).
inline std::vector<Construction> conjecture_family(Count n, const PathForest& forest) {
  if (forest.smallest() < 3)
    throw DomainError("conjecture_family: every path order must be >= 3");
  if (forest[0] <= 3)
    throw DomainError("conjecture_family: needs largest order k1 > 3");
  detail::check_capacity(n);
  std::vector<Construction> out;
  Count prefix = 0;
  for (int k : forest.orders()) {
    prefix += k;
    for (Construction& c : clique_union_family(n, prefix, k)) out.push_back(std::move(c));
  }
  out.push_back(forest_join(n, forest));
  for (const Construction& c : out) detail::certify_free(c, forest);
  return out;
}

}  // namespace turan
