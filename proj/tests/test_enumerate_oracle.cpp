#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles/cycle_index.hpp"
#include "support.hpp"
#include "turan/enumerate.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"

using namespace turan;

namespace {

// Smallest graph6 code over all relabellings: a canonical form that shares
// nothing with the orderly generation test.
std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    const std::string s = write_graph6(relabel(g, perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("class counts match the cycle index", "[enumerate]") {
  CHECK(ref::count_graphs(4) == 11);
  for (int n = 1; n <= 8; ++n) {
    const auto count = enumerate_nonisomorphic(n, [](const Graph&) {});
    INFO("n = " << n);
    REQUIRE(count == ref::count_graphs(n));
    REQUIRE(canonical_codes(n).size() == count);
  }
  CHECK(enumerate_nonisomorphic(1, [](const Graph&) {}) == 1);
}

TEST_CASE("representatives are pairwise non-isomorphic", "[enumerate]") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> forms;
    std::uint64_t seen = 0;
    enumerate_nonisomorphic(n, [&](const Graph& g) {
      REQUIRE(g.well_formed());
      REQUIRE(is_canonical(g));
      forms.insert(brute_canonical(g));
      ++seen;
    });
    REQUIRE(forms.size() == seen);
  }
}

TEST_CASE("every relabelling of a random graph meets one canonical form", "[enumerate]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = testing_support::random_graph(rng, n);
    std::set<std::uint64_t> canon;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const Graph h = relabel(g, perm);
      if (is_canonical(h)) canon.insert(pack_code(h));
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(canon.size() == 1);
  }
}

TEST_CASE("enumeration scale limits", "[enumerate]") {
  CHECK_THROWS_AS(enumerate_nonisomorphic(11, [](const Graph&) {}), ScaleRefusal);
  CHECK_THROWS_AS(enumerate_nonisomorphic(0, [](const Graph&) {}), ScaleRefusal);
  CHECK_THROWS_AS(is_canonical(Graph(11)), ScaleRefusal);
  CHECK(unpack_code(5, pack_code(complete(5))) == complete(5));
}

TEST_CASE("oracle examples", "[oracle]") {
  const auto a = oracle_ex(6, PathForest{4});
  CHECK(a.value == 6);
  CHECK(component_sizes(a.witness) == std::vector<int>{3, 3});
  CHECK(oracle_ex(7, PathForest{4, 3}).value == 15);
  CHECK(ex_forest(7, PathForest{4, 3}, ForestMode::proved).value == 15);
}

TEST_CASE("oracle witnesses are valid", "[oracle]") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 3; k <= n; ++k) {
      const auto r = oracle_ex(n, PathForest{k});
      REQUIRE(r.witness.edge_count() == r.value);
      REQUIRE(free_check(r.witness, PathForest{k}).free);
      REQUIRE(r.value == ex_path(n, k).value);
    }
}

TEST_CASE("oracle without seeding gives the same value", "[oracle]") {
  OracleOptions plain;
  plain.seed_with_construction = false;
  for (int n = 4; n <= 7; ++n) {
    const auto seeded = oracle_ex(n, PathForest{4, 3});
    const auto unseeded = oracle_ex(n, PathForest{4, 3}, plain);
    REQUIRE(seeded.value == unseeded.value);
    REQUIRE(unseeded.seed.empty());
    REQUIRE(seeded.graphs_checked <= unseeded.graphs_checked);
  }
}

TEST_CASE("oracle threads give the same value", "[oracle]") {
  OracleOptions many;
  many.threads = 3;
  const auto a = oracle_ex(7, PathForest{5});
  const auto b = oracle_ex(7, PathForest{5}, many);
  CHECK(a.value == b.value);
  CHECK(a.graphs_enumerated == b.graphs_enumerated);
}

TEST_CASE("oracle lists every extremal class", "[oracle]") {
  OracleOptions all;
  all.collect_all = true;
  // ex(6, P4) = 6 only by 2K3; the star K_{1,5} falls one short
  const auto a = oracle_ex(6, PathForest{4}, all);
  REQUIRE(a.extremal.size() == 1);
  CHECK(component_sizes(a.extremal[0]) == std::vector<int>{3, 3});
  // ex(5, P4) = 4: K3 ∪ K2 and the star K_{1,4}
  const auto b = oracle_ex(5, PathForest{4}, all);
  CHECK(b.value == 4);
  CHECK(b.extremal.size() == 2);
  for (const Graph& g : b.extremal) {
    CHECK(g.edge_count() == 4);
    CHECK(free_check(g, PathForest{4}).free);
  }
}

TEST_CASE("oracle scale gates", "[oracle]") {
  CHECK_THROWS_AS(oracle_ex(10, PathForest{3}), ScaleRefusal);
  CHECK_THROWS_AS(oracle_ex(11, PathForest{3}, OracleOptions{true, 1, true, false}), ScaleRefusal);
  CHECK_THROWS_AS(oracle_ex(0, PathForest{3}), ArgumentError);
  CHECK(oracle_ex(1, PathForest{3}).value == 0);
  CHECK(oracle_ex(2, PathForest{2}).value == 0);
}

TEST_CASE("oracle agrees with the two-path forest formula", "[oracle]") {
  // the only forests with at most one odd order, orders >= 3 and total <= 8
  for (const PathForest& f : {PathForest{4, 3}, PathForest{4, 4}}) {
    for (int n = f.total(); n <= 8; ++n) {
      INFO(f.to_string() << " n=" << n);
      REQUIRE(oracle_ex(n, f).value == ex_forest(n, f, ForestMode::proved).value);
    }
  }
}
