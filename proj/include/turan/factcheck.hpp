#pragma once

/*
 * Replay of the spine case analysis for connected 2P7-free graphs.
 *
 * Setting: a path x1 ... x13 (the spine, vertices 0..12) plus a small
 * attachment outside it: an isolated vertex y, a pendant edge y-z, or a
 * path y-z-w. Each rule or fact asserts that certain edges cannot be
 * present ("misses"), or that two edges cannot both be present. A claim is
 * verified when adding its edge(s) to the configuration produces a 2P7, and
 * the detector's witness is kept.
 *
 * From the verified claims the bound on e(G[spine]) is rederived: the 12
 * spine edges plus the largest set of the other 66 spine pairs avoiding all
 * forbidden singletons and taking at most one edge from each forbidden pair
 * (an exact maximum independent set on the pair-conflict graph).
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "turan/detector.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan::factcheck {

inline constexpr int kSpineOrder = 13;
inline constexpr int kSpineEdges = kSpineOrder - 1;
inline constexpr int kSpinePairs = kSpineOrder * (kSpineOrder - 1) / 2;  // 78
inline constexpr int kSlots = kSpinePairs - kSpineEdges;               // 66

/// Vertex of spine position x_i, i in 1..13.
constexpr int x(int i) { return i - 1; }
inline constexpr int kY = kSpineOrder;  // y: the vertex that hits the spine

inline const PathForest& two_p7() {
  static const PathForest f{7, 7};
  return f;
}

enum class Attachment { isolated, pendant, path3 };

/// Spine plus attachment. `hits` are spine positions (1..13) adjacent to y.
struct SpineConfig {
  Attachment kind = Attachment::isolated;
  std::vector<int> hits;
  std::vector<Edge> extra_edges;

  int order() const {
    switch (kind) {
      case Attachment::isolated: return kSpineOrder + 1;
      case Attachment::pendant: return kSpineOrder + 2;
      case Attachment::path3: return kSpineOrder + 3;
    }
    return kSpineOrder + 1;
  }

  Graph build() const {
    Graph g = path_graph(kSpineOrder);
    Graph out(order());
    for (Edge e : g.edges()) out.add_edge(e);
    if (kind != Attachment::isolated) out.add_edge(kY, kY + 1);
    if (kind == Attachment::path3) out.add_edge(kY + 1, kY + 2);
    for (int h : hits) {
      if (h < 1 || h > kSpineOrder) throw ArgumentError("hit position out of range");
      out.add_edge(kY, x(h));
    }
    for (Edge e : extra_edges) out.add_edge(e);
    return out;
  }

  /// Reversal x_i -> x_{14-i}.
  SpineConfig mirrored() const {
    SpineConfig m = *this;
    for (int& h : m.hits) h = kSpineOrder + 1 - h;
    std::sort(m.hits.begin(), m.hits.end());
    for (Edge& e : m.extra_edges) e = mirror(e);
    return m;
  }

  static Edge mirror(Edge e) {
    auto flip = [](int v) { return v < kSpineOrder ? kSpineOrder - 1 - v : v; };
    return Edge(flip(e.u), flip(e.v));
  }

  std::string describe() const {
    static const char* names[] = {"isolated y", "pendant y-z", "path y-z-w"};
    std::string out = names[static_cast<int>(kind)];
    out += ", y hits {";
    for (std::size_t i = 0; i < hits.size(); ++i)
      out += (i ? ",x" : "x") + std::to_string(hits[i]);
    return out + "}";
  }
};

inline std::string vertex_name(int v) {
  if (v < kSpineOrder) return "x" + std::to_string(v + 1);
  static const char* names[] = {"y", "z", "w"};
  return names[v - kSpineOrder];
}

inline std::string edge_name(Edge e) { return vertex_name(e.u) + vertex_name(e.v); }

/// One singleton ("edge is missing") or pair ("not both") claim.
struct Claim {
  std::vector<Edge> edges;  // one edge: forbidden; two edges: not both
  bool verified = false;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
  std::string note;
};

enum class Status { pass, claim_failed, pairwise_insufficient };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::claim_failed: return "CLAIM-FAILED";
    case Status::pairwise_insufficient: return "PAIRWISE-INSUFFICIENT";
  }
  return "?";
}

struct FactReport {
  std::string fact_id;
  SpineConfig config;
  std::string case_label;
  bool base_free = false;  // configuration alone is 2P7-free (claims non-vacuous)
  std::vector<Claim> claims;
  std::optional<int> derived_bound;   // facts only
  std::optional<int> stated_constant;  // the fact's stated bound
  std::optional<int> case_constant;   // bound stated for this case split
  Status status = Status::pass;

  bool passed() const { return status == Status::pass; }
  int singleton_count() const {
    return static_cast<int>(std::count_if(claims.begin(), claims.end(),
                                          [](const Claim& c) { return c.edges.size() == 1; }));
  }
  int pair_count() const { return static_cast<int>(claims.size()) - singleton_count(); }
};

/// Checks that adding `edges` to the configuration creates a 2P7.
inline Claim verify_claim(const SpineConfig& config, std::vector<Edge> edges) {
  Graph g = config.build();
  Claim c;
  c.edges = edges;
  for (Edge e : edges) {
    if (e.u == e.v || e.v >= g.order())
      throw ArgumentError("claim edge " + edge_name(e) + " outside configuration");
    if (g.adjacent(e.u, e.v)) {
      c.note = edge_name(e) + " already present";
      return c;
    }
    g.add_edge(e);
  }
  ContainResult r = contains_forest(g, two_p7());
  c.verified = r.contains;
  c.witness = std::move(r.witness);
  c.nodes = r.nodes;
  return c;
}

/// True iff adding `edge` to the configuration forces a 2P7, i.e. the edge
/// is genuinely forbidden. Throws if the edge is already present.
inline bool verify_miss_claim(const SpineConfig& config, Edge edge) {
  if (config.build().adjacent(edge.u, edge.v))
    throw ArgumentError("verify_miss_claim: edge " + edge_name(edge) +
                        " already in configuration");
  return verify_claim(config, {edge}).verified;
}

// ---------------------------------------------------------------------------
// Maximum independent set on the pair-conflict graph.

/// Exact maximum independent set size of a graph given by bit rows
/// (at most 64 vertices). Degree <= 1 vertices are taken greedily; otherwise
/// branch on a maximum-degree vertex, pruning by the candidate count.
class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(std::vector<Row> adj) : adj_(std::move(adj)) {
    if (adj_.size() > 64) throw ArgumentError("MIS limited to 64 vertices");
  }

  int solve() {
    best_ = 0;
    const Row all = adj_.size() == 64 ? ~Row{0} : bit(static_cast<int>(adj_.size())) - 1;
    branch(all, 0);
    return best_;
  }

 private:
  void branch(Row cand, int taken) {
    // Forced moves.
    bool again = true;
    while (again && cand != 0) {
      again = false;
      for (Row r = cand; r != 0; r &= r - 1) {
        const int v = std::countr_zero(r);
        if (!(cand & bit(v))) continue;
        const int d = std::popcount(adj_[v] & cand);
        if (d <= 1) {
          cand &= ~(bit(v) | adj_[v]);
          ++taken;
          again = true;
        }
      }
    }
    if (taken + std::popcount(cand) <= best_) return;
    if (cand == 0) {
      best_ = std::max(best_, taken);
      return;
    }
    int pick = -1;
    int pick_deg = -1;
    for (Row r = cand; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      const int d = std::popcount(adj_[v] & cand);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    branch(cand & ~(bit(pick) | adj_[pick]), taken + 1);
    branch(cand & ~bit(pick), taken);
  }

  std::vector<Row> adj_;
  int best_ = 0;
};

/// 12 + max number of non-spine spine pairs compatible with the verified
/// singleton and pair claims.
inline int derive_spine_bound(const std::vector<Claim>& claims) {
  auto slot_ok = [](Edge e) {
    return e.v < kSpineOrder && e.v - e.u >= 2;
  };
  std::set<Edge> forbidden;
  for (const Claim& c : claims)
    if (c.verified && c.edges.size() == 1 && slot_ok(c.edges[0])) forbidden.insert(c.edges[0]);

  std::vector<Edge> nodes;
  std::vector<std::pair<Edge, Edge>> conflicts;
  auto node_id = [&](Edge e) {
    auto it = std::find(nodes.begin(), nodes.end(), e);
    if (it != nodes.end()) return static_cast<int>(it - nodes.begin());
    nodes.push_back(e);
    return static_cast<int>(nodes.size()) - 1;
  };
  std::vector<std::pair<int, int>> links;
  for (const Claim& c : claims) {
    if (!c.verified || c.edges.size() != 2) continue;
    const Edge a = c.edges[0];
    const Edge b = c.edges[1];
    if (!slot_ok(a) || !slot_ok(b) || forbidden.count(a) || forbidden.count(b)) continue;
    links.emplace_back(node_id(a), node_id(b));
  }
  std::vector<Row> adj(nodes.size(), 0);
  for (auto [p, q] : links) {
    adj[p] |= bit(q);
    adj[q] |= bit(p);
  }
  const int free_slots = kSlots - static_cast<int>(forbidden.size());
  const int mis = MaxIndependentSet(adj).solve();
  return kSpineEdges + free_slots - (static_cast<int>(nodes.size()) - mis);
}

// ---------------------------------------------------------------------------
// Claim sets.

struct CaseClaims {
  std::string label;
  std::vector<std::vector<Edge>> claims;
  int case_constant = 0;
};

namespace detail {

inline Edge sx(int a, int b) { return Edge(x(a), x(b)); }

inline void add_cross(std::vector<std::vector<Edge>>& out, const std::vector<int>& as,
                      const std::vector<int>& bs) {
  for (int a : as)
    for (int b : bs) {
      if (a == b) continue;
      if (std::abs(a - b) == 1)
        throw InternalInconsistency("miss claim on spine edge x" + std::to_string(a) +
                                    "x" + std::to_string(b));
      const std::vector<Edge> claim{sx(a, b)};
      if (std::find(out.begin(), out.end(), claim) == out.end()) out.push_back(claim);
    }
}

inline void add_within(std::vector<std::vector<Edge>>& out, const std::vector<int>& set) {
  for (std::size_t p = 0; p < set.size(); ++p)
    for (std::size_t q = p + 1; q < set.size(); ++q) add_cross(out, {set[p]}, {set[q]});
}

inline bool has(const std::vector<int>& s, int v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

inline CaseClaims mirror_claims(CaseClaims c) {
  c.label += " (mirrored)";
  for (auto& claim : c.claims)
    for (Edge& e : claim) e = SpineConfig::mirror(e);
  return c;
}

inline std::vector<int> mirror_hits(std::vector<int> s) {
  for (int& h : s) h = kSpineOrder + 1 - h;
  std::sort(s.begin(), s.end());
  return s;
}

// Neighbours of y on the spine {x_{s-1}} ∪ {x13}, and {x1} ∪ {x_{s+1}}:
// each set is independent, since an edge inside either closes a P14.
inline std::vector<int> rotation_set_a(const std::vector<int>& s) {
  std::vector<int> a;
  for (int h : s) a.push_back(h - 1);
  a.push_back(13);
  return a;
}
inline std::vector<int> rotation_set_b(const std::vector<int>& s) {
  std::vector<int> b{1};
  for (int h : s) b.push_back(h + 1);
  return b;
}

inline int rotation_overlap(const std::vector<int>& s) {
  const auto a = rotation_set_a(s);
  const auto b = rotation_set_b(s);
  return static_cast<int>(std::count_if(a.begin(), a.end(), [&](int v) { return has(b, v); }));
}

// Consecutive pairs {q, q+1} inside [lo, hi] avoiding the hit set.
inline std::vector<int> free_consecutive(const std::vector<int>& s, int lo, int hi) {
  std::vector<int> out;
  for (int q = lo; q + 1 <= hi; ++q)
    if (!has(s, q) && !has(s, q + 1)) {
      out.push_back(q);
      out.push_back(q + 1);
    }
  return out;
}

// Tries the case split directly, then on the reversed configuration.
template <class Direct>
std::optional<CaseClaims> direct_or_mirrored(const std::vector<int>& s, Direct&& direct) {
  if (auto c = direct(s)) return c;
  if (auto c = direct(mirror_hits(s))) return mirror_claims(*c);
  return std::nullopt;
}

}  // namespace detail

/// Hit sets of an isolated y: no x1, x6, x8, x13, no two consecutive
/// positions, never both x_p and x_{p+8} for p = 2, 3, 4.
inline bool isolated_admissible(const std::vector<int>& s) {
  for (int h : s)
    if (h < 1 || h > 13 || h == 1 || h == 6 || h == 8 || h == 13) return false;
  for (int a : s)
    for (int b : s) {
      if (b == a + 1) return false;
      if (b == a + 8 && a >= 2 && a <= 4) return false;
    }
  return true;
}

/// Hit sets of a non-isolated y: subsets of {x3,x4,x7,x10,x11} that are
/// also isolated-admissible.
inline bool nonisolated_admissible(const std::vector<int>& s) {
  for (int h : s)
    if (h != 3 && h != 4 && h != 7 && h != 10 && h != 11) return false;
  return isolated_admissible(s);
}

inline std::vector<std::vector<int>> hit_sets(int size, bool nonisolated) {
  std::vector<std::vector<int>> out;
  for (Row mask = 0; mask < bit(13); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<int> s;
    for (int i = 0; i < 13; ++i)
      if (mask & bit(i)) s.push_back(i + 1);
    if (nonisolated ? nonisolated_admissible(s) : isolated_admissible(s)) out.push_back(s);
  }
  return out;
}

inline CaseClaims fact1_claims(int i) {
  CaseClaims c{"hit at x" + std::to_string(i), {}, 74};
  for (int j = 1; j <= i - 2; ++j)
    c.claims.push_back({detail::sx(13, j), detail::sx(i + 1, j + 1)});
  return c;
}

inline CaseClaims fact2_claims() {
  CaseClaims c{"y hits x7", {}, 57};
  detail::add_cross(c.claims, {1, 2, 3, 5, 6}, {11, 12, 13});
  detail::add_cross(c.claims, {8, 9, 11, 12, 13}, {1, 2, 3});
  return c;
}

inline std::optional<CaseClaims> fact3_claims(const std::vector<int>& s) {
  auto direct = [](const std::vector<int>& h) -> std::optional<CaseClaims> {
    if (h.size() != 1) return std::nullopt;
    const int i = h[0];
    if (i == 3 || i == 4) {
      CaseClaims c{"x_i in {x3,x4}", {}, 68};
      std::vector<int> left;
      for (int p = 1; p < i; ++p) left.push_back(p);
      detail::add_cross(c.claims, left, {i + 1, i + 2, 9, 12, 13});
      return c;
    }
    if (i == 7) {
      CaseClaims c{"x_i = x7", {}, 66};
      detail::add_cross(c.claims, {1, 2, 5, 6}, {12, 13});
      detail::add_cross(c.claims, {8, 9, 12, 13}, {1, 2});
      return c;
    }
    return std::nullopt;
  };
  return detail::direct_or_mirrored(s, direct);
}

inline std::optional<CaseClaims> fact4_claims(const std::vector<int>& s) {
  auto direct = [](const std::vector<int>& h) -> std::optional<CaseClaims> {
    if (h.size() != 2) return std::nullopt;
    const int i = h[0];
    const int j = h[1];
    if (i == 3 && (j == 7 || j == 10)) {
      CaseClaims c{"x_i = x3", {}, 58};
      detail::add_cross(c.claims, {1, 2}, {4, 5, 6, 8, 9, 11, 12, 13});
      detail::add_cross(c.claims, {j - 2, j - 1}, {12, 13});
      return c;
    }
    if (i == 4 && (j == 7 || j == 10)) {
      CaseClaims c{"x_i = x4", {}, 59};
      detail::add_cross(c.claims, {1, 2, 3}, {5, 6, 9, 12, 13});
      detail::add_cross(c.claims, {j - 2, j - 1}, {12, 13});
      return c;
    }
    return std::nullopt;
  };
  return detail::direct_or_mirrored(s, direct);
}

inline CaseClaims rotation_claims(const std::vector<int>& s) {
  CaseClaims c;
  detail::add_within(c.claims, detail::rotation_set_a(s));
  detail::add_within(c.claims, detail::rotation_set_b(s));
  return c;
}

inline std::optional<CaseClaims> fact5_extra(const std::vector<int>& s) {
  using detail::add_cross;
  using detail::free_consecutive;
  if (s.size() != 5) return std::nullopt;
  const int i = s[0], j = s[1], l = s[3], m = s[4];
  CaseClaims c{{}, {}, 50};
  if (i == 2 && m == 12) {
    if (s != std::vector<int>{2, 5, 7, 9, 12}) return std::nullopt;
    c.label = "i=2, m=12";
    add_cross(c.claims, {5}, {10, 11});
    add_cross(c.claims, {9}, {3, 4});
  } else if (i == 2) {
    if (l != 9 || m != 11) return std::nullopt;
    c.label = "i=2, m!=12";
    add_cross(c.claims, {m}, {3, 6});
    add_cross(c.claims, {l}, free_consecutive(s, 1, 7));
  } else if (m == 12) {
    if (i != 3 || j != 5) return std::nullopt;
    c.label = "i!=2, m=12";
    add_cross(c.claims, {i}, {8, 11});
    add_cross(c.claims, {j}, free_consecutive(s, 7, 13));
  } else {
    return std::nullopt;
  }
  return c;
}

inline std::optional<CaseClaims> fact6_extra(const std::vector<int>& s) {
  using detail::add_cross;
  auto direct = [](const std::vector<int>& h) -> std::optional<CaseClaims> {
    const int i = h[0], j = h[1], k = h[2], l = h[3];
    const bool seven = (j == 7 || k == 7);
    CaseClaims c{{}, {}, 59};
    if (i == 2 && l == 12) {
      if (!seven) return std::nullopt;
      c.label = "i=2, l=12";
      add_cross(c.claims, {3}, {11});
      add_cross(c.claims, {1}, {10});
      add_cross(c.claims, {4}, {13});
    } else if (i == 2 && seven) {
      c.label = "i=2, l!=12, 7 in {j,k}";
      add_cross(c.claims, {11}, {3, 6});
    } else if (i == 2) {
      if (h != std::vector<int>{2, 4, 9, 11}) return std::nullopt;
      c.label = "i=2, l!=12, 7 not in {j,k}";
      add_cross(c.claims, {11}, {5, 8});
    } else if (l != 12) {
      if (h != std::vector<int>{3, 5, 7, 9}) return std::nullopt;
      c.label = "i!=2, l!=12";
      add_cross(c.claims, {11}, {1, 4});
    } else {
      return std::nullopt;  // l = 12, i != 2: the reversed case
    }
    return c;
  };
  if (s.size() != 4) return std::nullopt;
  return detail::direct_or_mirrored(s, direct);
}

// ---------------------------------------------------------------------------
// Reports.

namespace detail {

inline FactReport run_claims(std::string fact_id, const SpineConfig& config,
                             const std::vector<std::vector<Edge>>& claims) {
  FactReport r;
  r.fact_id = std::move(fact_id);
  r.config = config;
  r.base_free = !contains_forest(config.build(), two_p7()).contains;
  for (const auto& edges : claims) r.claims.push_back(verify_claim(config, edges));
  const bool all = std::all_of(r.claims.begin(), r.claims.end(),
                               [](const Claim& c) { return c.verified; });
  r.status = all ? Status::pass : Status::claim_failed;
  return r;
}

inline FactReport bounded(std::string fact_id, const SpineConfig& config,
                          const CaseClaims& cc, int stated_constant) {
  FactReport r = run_claims(std::move(fact_id), config, cc.claims);
  r.case_label = cc.label;
  r.stated_constant = stated_constant;
  r.case_constant = cc.case_constant;
  r.derived_bound = derive_spine_bound(r.claims);
  if (r.status == Status::pass && *r.derived_bound > cc.case_constant)
    r.status = Status::pairwise_insufficient;
  return r;
}

inline SpineConfig config_of(Attachment kind, std::vector<int> hits) {
  return SpineConfig{kind, std::move(hits), {}};
}

}  // namespace detail

/// Forbidden spine neighbours of any outside vertex: x1, x6, x8, x13.
inline FactReport star_rule() {
  std::vector<std::vector<Edge>> claims;
  for (int i : {1, 6, 8, 13}) claims.push_back({Edge(kY, x(i))});
  FactReport r = detail::run_claims("star-rule", detail::config_of(Attachment::isolated, {}), claims);
  r.case_label = "y misses {x1,x6,x8,x13}";
  return r;
}

/// Rule (*): no outside vertex hits two consecutive spine vertices.
inline FactReport adjacent_rule() {
  std::vector<std::vector<Edge>> claims;
  for (int i = 1; i < kSpineOrder; ++i) claims.push_back({Edge(kY, x(i)), Edge(kY, x(i + 1))});
  FactReport r =
      detail::run_claims("adjacent-rule", detail::config_of(Attachment::isolated, {}), claims);
  r.case_label = "y never hits both x_i and x_{i+1}";
  return r;
}

/// No outside vertex hits both x_p and x_{p+8}, p = 2, 3, 4.
inline FactReport hit_pair_rule() {
  std::vector<std::vector<Edge>> claims;
  for (int p : {2, 3, 4}) claims.push_back({Edge(kY, x(p)), Edge(kY, x(p + 8))});
  FactReport r =
      detail::run_claims("hit-pair-rule", detail::config_of(Attachment::isolated, {}), claims);
  r.case_label = "y never hits both x_p and x_{p+8}";
  return r;
}

/// A vertex with an outside neighbour only hits {x3,x4,x7,x10,x11}: checks
/// the remaining (*)-compatible positions x2, x5, x9, x12.
inline FactReport nonisolated_rule() {
  std::vector<std::vector<Edge>> claims;
  for (int i : {2, 5, 9, 12}) claims.push_back({Edge(kY, x(i))});
  FactReport r =
      detail::run_claims("nonisolated-rule", detail::config_of(Attachment::pendant, {}), claims);
  r.case_label = "pendant y misses {x2,x5,x9,x12}";
  return r;
}

/// The end of an outside P3 can only hit x7.
inline FactReport p3_rule() {
  std::vector<std::vector<Edge>> claims;
  for (int i = 1; i <= kSpineOrder; ++i)
    if (i != 7) claims.push_back({Edge(kY, x(i))});
  FactReport r = detail::run_claims("p3-rule", detail::config_of(Attachment::path3, {}), claims);
  r.case_label = "y misses every x_i except x7";
  return r;
}

/// Report for one fact on one configuration. The configuration must match
/// the fact's hypothesis (attachment kind and hit-set size).
inline FactReport fact_bound(int fact, const SpineConfig& config) {
  using detail::bounded;
  const std::string id = "fact" + std::to_string(fact);
  const auto& s = config.hits;
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ArgumentError(id + ": configuration " + config.describe() + " " + what);
  };
  switch (fact) {
    case 1:
      require(config.kind == Attachment::isolated && s.size() == 1 && s[0] >= 6 && s[0] <= 12,
              "needs one hit x_i with 6 <= i <= 12");
      return bounded(id, config, fact1_claims(s[0]), 74);
    case 2:
      require(config.kind == Attachment::path3 && s == std::vector<int>{7},
              "needs a path y-z-w with y hitting x7");
      return bounded(id, config, fact2_claims(), 57);
    case 3:
    case 4: {
      require(config.kind == Attachment::pendant &&
                  s.size() == static_cast<std::size_t>(fact - 2) && nonisolated_admissible(s),
              "needs a pendant y with admissible hits");
      auto cc = fact == 3 ? fact3_claims(s) : fact4_claims(s);
      if (!cc) throw InternalInconsistency(id + ": no case covers " + config.describe());
      return bounded(id, config, *cc, fact == 3 ? 68 : 59);
    }
    case 5:
    case 6:
    case 7: {
      const std::size_t size = static_cast<std::size_t>(10 - fact);
      require(config.kind == Attachment::isolated && s.size() == size && isolated_admissible(s),
              "needs an isolated y with an admissible hit set of the right size");
      CaseClaims cc = rotation_claims(s);
      const int stated = fact == 5 ? 50 : fact == 6 ? 59 : 67;
      cc.case_constant = stated;
      cc.label = "|A∩B|=" + std::to_string(detail::rotation_overlap(s));
      std::optional<CaseClaims> extra;
      if (fact == 5) extra = fact5_extra(s);
      if (fact == 6 && detail::rotation_overlap(s) == 3) extra = fact6_extra(s);
      if (extra) {
        cc.label += ", " + extra->label;
        for (auto& c : extra->claims)
          if (std::find(cc.claims.begin(), cc.claims.end(), c) == cc.claims.end())
            cc.claims.push_back(c);
      }
      return bounded(id, config, cc, stated);
    }
    default:
      throw ArgumentError("unknown fact " + std::to_string(fact));
  }
}

/// Every admissible configuration of one fact.
inline std::vector<SpineConfig> fact_configs(int fact) {
  std::vector<SpineConfig> out;
  switch (fact) {
    case 1:
      for (int i = 6; i <= 12; ++i) out.push_back(detail::config_of(Attachment::isolated, {i}));
      break;
    case 2:
      out.push_back(detail::config_of(Attachment::path3, {7}));
      break;
    case 3:
    case 4:
      for (auto& s : hit_sets(fact - 2, true))
        out.push_back(detail::config_of(Attachment::pendant, s));
      break;
    case 5:
    case 6:
    case 7:
      for (auto& s : hit_sets(10 - fact, false))
        out.push_back(detail::config_of(Attachment::isolated, s));
      break;
    default:
      throw ArgumentError("unknown fact " + std::to_string(fact));
  }
  return out;
}

inline std::vector<FactReport> verify_fact(int fact) {
  std::vector<FactReport> out;
  for (const SpineConfig& c : fact_configs(fact)) out.push_back(fact_bound(fact, c));
  return out;
}

inline std::vector<FactReport> verify_rules() {
  return {star_rule(), adjacent_rule(), hit_pair_rule(), nonisolated_rule(), p3_rule()};
}

inline std::vector<FactReport> verify_all_facts() {
  std::vector<FactReport> out = verify_rules();
  for (int f = 1; f <= 7; ++f)
    for (FactReport& r : verify_fact(f)) out.push_back(std::move(r));
  return out;
}

/// Largest derived bound over a set of reports of one fact.
inline int worst_bound(const std::vector<FactReport>& reports) {
  int worst = 0;
  for (const auto& r : reports)
    if (r.derived_bound) worst = std::max(worst, *r.derived_bound);
  return worst;
}

}  // namespace turan::factcheck
