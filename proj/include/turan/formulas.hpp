#pragma once

/*
 * Closed-form Turán values for linear forests. Everything is exact integer
 * arithmetic on std::int64_t.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/forest.hpp"

namespace turan {

using Count = std::int64_t;

constexpr Count choose2(Count a) { return a <= 1 ? 0 : a * (a - 1) / 2; }

struct Term {
  std::string label;
  Count value = 0;
};

/// The maximum of a list of labelled terms, remembering which one won.
struct TuranValue {
  Count value = 0;
  std::string argmax;
  bool tie = false;
  bool conjectural = false;
  std::vector<Term> terms;

  static TuranValue max_of(std::vector<Term> terms, bool conjectural = false) {
    if (terms.empty()) throw ArgumentError("max over no terms");
    TuranValue out;
    out.conjectural = conjectural;
    out.value = terms.front().value;
    out.argmax = terms.front().label;
    int winners = 0;
    for (const Term& t : terms) {
      if (t.value > out.value) {
        out.value = t.value;
        out.argmax = t.label;
      }
    }
    for (const Term& t : terms) winners += (t.value == out.value);
    out.tie = winners >= 2;
    out.terms = std::move(terms);
    return out;
  }

  /// Winning labels in term order (more than one on a tie).
  std::vector<std::string> winners() const {
    std::vector<std::string> out;
    for (const Term& t : terms)
      if (t.value == value) out.push_back(t.label);
    return out;
  }
};

/// n = (m-1) + t(l-1) + r with 0 <= r < l-1, or the small case n <= m-1.
struct BracketDecomposition {
  Count n = 0;
  Count m = 0;
  Count l = 0;
  Count t = 0;
  Count r = 0;
  bool small_case = false;
};

inline BracketDecomposition decompose_bracket(Count n, Count m, Count l) {
  if (l < 3) throw ArgumentError("[n,m,l] needs l >= 3");
  if (m < l) throw ArgumentError("[n,m,l] needs m >= l");
  if (n < 0) throw ArgumentError("[n,m,l] needs n >= 0");
  BracketDecomposition d{n, m, l, 0, 0, false};
  if (n <= m - 1) {
    d.small_case = true;
    return d;
  }
  d.t = (n - (m - 1)) / (l - 1);
  d.r = (n - (m - 1)) % (l - 1);
  return d;
}

/// [n, m, l]: a clique K_{m-1} plus as many K_{l-1} as fit plus a remainder
/// clique; C(n,2) when n <= m-1.
inline Count bracket_nml(Count n, Count m, Count l) {
  const BracketDecomposition d = decompose_bracket(n, m, l);
  if (d.small_case) return choose2(n);
  return choose2(m - 1) + d.t * choose2(l - 1) + choose2(d.r);
}

/// [n, s] = C(s-1, 2) + (s-1)(n-s+1): K_{s-1} joined to n-s+1 vertices.
inline Count bracket_s(Count n, Count s) {
  if (s < 1) throw ArgumentError("[n,s] needs s >= 1");
  if (n < s)
    throw DomainError("[n,s] needs n >= s (n = " + std::to_string(n) +
                      ", s = " + std::to_string(s) + ")");
  return choose2(s - 1) + (s - 1) * (n - s + 1);
}

/// [n, s] with s = Σ ⌊k_i / 2⌋ over the forest.
inline Count bracket_ns(Count n, const PathForest& forest) {
  return bracket_s(n, forest.half_sum());
}

namespace detail {
inline std::string bracket_label(Count m, Count l) {
  return "[n," + std::to_string(m) + "," + std::to_string(l) + "]";
}
}  // namespace detail

/// ex(n, P_k) = [n, k, k]; cross-checked against (n(k-1) + r(r-k))/2 for P_{k+1}.
inline TuranValue ex_path(Count n, Count k) {
  if (k < 2) throw ArgumentError("ex_path needs k >= 2");
  if (n < 0) throw ArgumentError("ex_path needs n >= 0");
  if (k == 2) return TuranValue::max_of({{"P2-free: edgeless", 0}});
  const Count value = bracket_nml(n, k, k);
  // ex(n, P_{j+1}) = (n(j-1) + r(r-j))/2 with j = k-1 and r = n mod j.
  const Count j = k - 1;
  const Count r = n % j;
  const Count closed = (n * (j - 1) + r * (r - j)) / 2;
  if (closed != value)
    throw InternalInconsistency("ex_path: closed form disagrees with [n,k,k] at n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  return TuranValue::max_of({{detail::bracket_label(k, k), value}});
}

/// Maximum edges of a connected P_k-free graph on n vertices.
inline TuranValue ex_connected_path(Count n, Count k) {
  if (k < 4) throw DomainError("ex_connected_path needs k >= 4");
  if (n < k) throw DomainError("ex_connected_path needs n >= k");
  const Count c = k % 2;
  return TuranValue::max_of({
      {"C(k-2,2)+(n-k+2)", choose2(k - 2) + (n - k + 2)},
      {"[n," + std::to_string(k / 2) + "]+" + std::to_string(c),
       bracket_s(n, k / 2) + c},
  });
}

/// Sufficient n for the large-n formula for ex(n, k P_l):
/// 2l + 2kl(⌈l/2⌉ + 1) C(l, ⌊l/2⌋).
inline Count kpl_threshold(Count k, Count l) {
  if (k < 1 || l < 1) throw ArgumentError("kpl_threshold needs k, l >= 1");
  Count binom = 1;
  const Count h = l / 2;
  for (Count i = 1; i <= h; ++i) binom = binom * (l - h + i) / i;
  return 2 * l + 2 * k * l * ((l + 1) / 2 + 1) * binom;
}

struct KplValue {
  TuranValue value;
  Count threshold = 0;
  bool valid = false;  // n >= threshold, where the formula is a theorem
};

/// [n, k⌊l/2⌋] + (l mod 2), flagged with whether n clears the threshold.
inline KplValue ex_kpl_large_n(Count n, Count k, Count l) {
  if (k < 2) throw ArgumentError("ex_kpl_large_n needs k >= 2");
  if (l < 4) throw ArgumentError("ex_kpl_large_n needs l >= 4");
  const Count s = k * (l / 2);
  const Count c = l % 2;
  KplValue out;
  out.threshold = kpl_threshold(k, l);
  out.valid = n >= out.threshold;
  out.value = TuranValue::max_of(
      {{"[n," + std::to_string(s) + "]+" + std::to_string(c), bracket_s(n, s) + c}},
      !out.valid);
  return out;
}

enum class ForestMode { proved, conjecture };

inline const char* to_string(ForestMode m) {
  return m == ForestMode::proved ? "proved" : "conjecture";
}

/*
 * max{ [n, k1, k1], [n, k1+k2, k2], ..., [n, Σk_i, k_m], [n, Σ⌊k_i/2⌋] + c }.
 * proved mode: at most one odd order, all k_i >= 3, n >= Σk_i, c = 0.
 * conjecture mode: k1 > 3, all k_i >= 3, c = 1 iff every k_i is odd; the
 * result is flagged conjectural.
 */
inline TuranValue ex_forest(Count n, const PathForest& forest, ForestMode mode) {
  if (forest.smallest() < 3)
    throw DomainError("ex_forest: every path order must be >= 3");
  Count c = 0;
  if (mode == ForestMode::proved) {
    if (forest.odd_count() > 1)
      throw DomainError("ex_forest(proved): more than one odd path order");
    if (n < forest.total())
      throw DomainError("ex_forest(proved): needs n >= sum of path orders");
  } else {
    if (forest[0] <= 3)
      throw DomainError("ex_forest(conjecture): needs largest order k1 > 3");
    c = forest.all_odd() ? 1 : 0;
  }
  const Count s = forest.half_sum();
  if (n < s)
    throw DomainError("ex_forest: needs n >= sum of floor(k_i/2)");

  std::vector<Term> terms;
  Count prefix = 0;
  for (int k : forest.orders()) {
    prefix += k;
    terms.push_back({detail::bracket_label(prefix, k), bracket_nml(n, prefix, k)});
  }
  std::string label = "[n," + std::to_string(s) + "]";
  if (mode == ForestMode::conjecture) label += "+" + std::to_string(c);
  terms.push_back({label, bracket_s(n, s) + c});
  return TuranValue::max_of(std::move(terms), mode == ForestMode::conjecture);
}

inline constexpr const char* kBracketBranch = "[n,14,7]";
inline constexpr const char* kLinearBranch = "5n-14";

/// ex(n, 2P7) = max{[n,14,7], 5n-14} for n >= 14.
inline TuranValue ex_2p7(Count n) {
  if (n < 14) throw DomainError("ex_2p7 needs n >= 14");
  return TuranValue::max_of({{kBracketBranch, bracket_nml(n, 14, 7)},
                             {kLinearBranch, 5 * n - 14}});
}

}  // namespace turan
