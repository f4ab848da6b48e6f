#include <catch_amalgamated.hpp>

#include "turan/forest.hpp"
#include "turan/formulas.hpp"

using namespace turan;

TEST_CASE("path forest parsing and normalisation", "[forest]") {
  const PathForest f = PathForest::parse("3,7,7");
  CHECK(f.orders() == std::vector<int>{7, 7, 3});
  CHECK(f.total() == 17);
  CHECK(f.half_sum() == 7);
  CHECK(f.odd_count() == 3);
  CHECK(f.all_odd());
  CHECK(f.to_string() == "7,7,3");
  CHECK(PathForest::parse("4,3") == PathForest{3, 4});
  CHECK_THROWS_AS(PathForest::parse(""), ArgumentError);
  CHECK_THROWS_AS(PathForest::parse("7,"), ArgumentError);
  CHECK_THROWS_AS(PathForest::parse("7,x"), ArgumentError);
  CHECK_THROWS_AS(PathForest{1}, ArgumentError);
  CHECK(PathForest{2}.total() == 2);
}

TEST_CASE("[n,m,l] examples", "[bracket]") {
  CHECK(bracket_nml(13, 14, 7) == 78);
  CHECK(bracket_nml(22, 14, 7) == 96);
  CHECK(bracket_nml(9, 7, 7) == 18);
  CHECK(bracket_nml(0, 3, 3) == 0);
  const auto d = decompose_bracket(22, 14, 7);
  CHECK_FALSE(d.small_case);
  CHECK(d.t == 1);
  CHECK(d.r == 3);
  CHECK(decompose_bracket(13, 14, 7).small_case);
  CHECK_THROWS_AS(bracket_nml(10, 5, 2), ArgumentError);
  CHECK_THROWS_AS(bracket_nml(10, 5, 6), ArgumentError);
}

TEST_CASE("[n,m,l] decomposition is exact", "[bracket][property]") {
  for (Count l = 3; l <= 10; ++l)
    for (Count m = l; m <= 20; ++m)
      for (Count n = 0; n <= 80; ++n) {
        const auto d = decompose_bracket(n, m, l);
        if (d.small_case) {
          REQUIRE(n <= m - 1);
          continue;
        }
        REQUIRE(n == (m - 1) + d.t * (l - 1) + d.r);
        REQUIRE(d.r >= 0);
        REQUIRE(d.r < l - 1);
      }
}

TEST_CASE("[n,14,7] closed form for n = 14..200", "[bracket]") {
  for (Count n = 14; n <= 200; ++n) {
    const Count r = (n - 13) % 6;
    REQUIRE(2 * bracket_nml(n, 14, 7) == 5 * n + 91 + r * (r - 6));
  }
}

TEST_CASE("[n,s] examples", "[bracket]") {
  CHECK(bracket_ns(7, PathForest{7, 7}) == 20);
  CHECK(bracket_ns(7, PathForest{4, 3}) == 11);
  for (Count n = 7; n <= 60; ++n) REQUIRE(bracket_ns(n, PathForest{7, 7}) + 1 == 5 * n - 14);
  CHECK_THROWS_AS(bracket_ns(5, PathForest{7, 7}), DomainError);
}

TEST_CASE("ex(n, P_k)", "[path]") {
  CHECK(ex_path(7, 7).value == 15);
  CHECK(ex_path(6, 4).value == 6);
  CHECK(ex_path(10, 2).value == 0);
  CHECK_THROWS_AS(ex_path(5, 1), ArgumentError);
  for (Count k = 2; k <= 60; ++k)
    for (Count n = k; n <= 60; ++n) REQUIRE(2 * ex_path(n, k).value <= (k - 2) * n);
  // equality exactly when (k-1) divides n
  for (Count k = 3; k <= 20; ++k)
    for (Count n = k; n <= 60; ++n)
      REQUIRE((2 * ex_path(n, k).value == (k - 2) * n) == (n % (k - 1) == 0));
}

TEST_CASE("closed form for ex(n, P_{k+1})", "[path]") {
  for (Count k = 2; k <= 12; ++k)
    for (Count n = k + 1; n <= 60; ++n) {
      const Count r = n % k;
      REQUIRE(2 * bracket_nml(n, k + 1, k + 1) == n * (k - 1) + r * (r - k));
    }
}

TEST_CASE("connected P_k-free", "[path]") {
  const auto a = ex_connected_path(14, 13);
  CHECK(a.value == 58);
  CHECK(a.argmax == "C(k-2,2)+(n-k+2)");
  CHECK(a.terms.at(1).value == 56);
  const auto b = ex_connected_path(13, 13);
  CHECK(b.value == 57);
  CHECK(b.terms.at(1).value == 51);
  CHECK_THROWS_AS(ex_connected_path(10, 3), DomainError);
  CHECK_THROWS_AS(ex_connected_path(5, 6), DomainError);
}

TEST_CASE("k P_l for large n", "[kpl]") {
  CHECK(kpl_threshold(2, 7) == 4914);
  const auto v = ex_kpl_large_n(5000, 2, 7);
  CHECK(v.value.value == 24986);
  CHECK(v.valid);
  CHECK_FALSE(v.value.conjectural);
  const auto early = ex_kpl_large_n(100, 2, 7);
  CHECK_FALSE(early.valid);
  CHECK(early.value.conjectural);
  for (Count n = 22; n <= 200; ++n) REQUIRE(ex_kpl_large_n(n, 2, 7).value.value == ex_2p7(n).value);
}

TEST_CASE("general forests", "[forest]") {
  const auto a = ex_forest(7, PathForest{4, 3}, ForestMode::proved);
  CHECK(a.value == 15);
  REQUIRE(a.terms.size() == 3);
  CHECK(a.terms[0].value == 6);
  CHECK(a.terms[1].value == 15);
  CHECK(a.terms[2].value == 11);
  CHECK(a.argmax == "[n,7,3]");
  CHECK_FALSE(a.conjectural);

  const auto b = ex_forest(8, PathForest{4, 4}, ForestMode::proved);
  CHECK(b.value == 21);
  CHECK(b.terms[0].value == 7);
  CHECK(b.terms[2].value == 18);

  for (Count n = 14; n <= 200; ++n) {
    const auto c = ex_forest(n, PathForest{7, 7}, ForestMode::conjecture);
    REQUIRE(c.conjectural);
    REQUIRE(c.value == ex_2p7(n).value);
  }
}

TEST_CASE("forest mode preconditions", "[forest]") {
  CHECK_THROWS_AS(ex_forest(20, PathForest{7, 5}, ForestMode::proved), DomainError);
  CHECK_THROWS_AS(ex_forest(6, PathForest{4, 3}, ForestMode::proved), DomainError);
  CHECK_THROWS_AS(ex_forest(20, PathForest{3, 3}, ForestMode::conjecture), DomainError);
  CHECK_THROWS_AS(ex_forest(20, PathForest{4, 2}, ForestMode::conjecture), DomainError);
  CHECK_NOTHROW(ex_forest(20, PathForest{7, 5}, ForestMode::conjecture));
  try {
    ex_forest(20, PathForest{7, 5}, ForestMode::proved);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("odd") != std::string::npos);
  }
}

TEST_CASE("ex(n, 2P7) branches", "[2p7]") {
  const auto a = ex_2p7(14);
  CHECK(a.value == 78);
  CHECK(a.argmax == kBracketBranch);
  CHECK_FALSE(a.tie);
  const auto b = ex_2p7(22);
  CHECK(b.value == 96);
  CHECK(b.tie);
  CHECK(b.winners().size() == 2);
  const auto c = ex_2p7(30);
  CHECK(c.value == 136);
  CHECK(c.argmax == kLinearBranch);
  CHECK(c.terms[0].value == 118);
  CHECK_THROWS_AS(ex_2p7(13), DomainError);
}

TEST_CASE("ex(n, 2P7) crossover", "[2p7]") {
  for (Count n = 14; n <= 200; ++n) {
    const Count br = bracket_nml(n, 14, 7);
    const Count lin = 5 * n - 14;
    const auto v = ex_2p7(n);
    REQUIRE(v.value == std::max(br, lin));
    if (n <= 21) REQUIRE(br > lin);
    if (n == 22) REQUIRE(br == lin);
    if (n >= 23) REQUIRE(lin > br);
    REQUIRE(v.tie == (n == 22));
  }
}

TEST_CASE("bracket inequality, clique-sum form", "[inequality]") {
  for (Count k2 = 3; k2 <= 8; ++k2)
    for (Count k1 = k2; k1 <= 8; ++k1)
      for (Count n1 = k1; n1 <= 40; ++n1)
        for (Count n2 = 0; n2 <= 40; ++n2)
          REQUIRE(bracket_nml(n1, k1 + k2, k2) + bracket_nml(n2, k2, k2) <=
                  bracket_nml(n1 + n2, k1 + k2, k2));
}

TEST_CASE("bracket inequality, join form (strict)", "[inequality]") {
  for (Count k2 = 3; k2 <= 8; ++k2)
    for (Count k1 = k2; k1 <= 8; ++k1) {
      const Count s = k1 / 2 + k2 / 2;
      for (Count n1 = k1 + k2; n1 <= 79; ++n1)
        for (Count n2 = 1; n1 + n2 <= 80; ++n2)
          REQUIRE(bracket_s(n1, s) + bracket_nml(n2, k2, k2) < bracket_s(n1 + n2, s));
    }
}
