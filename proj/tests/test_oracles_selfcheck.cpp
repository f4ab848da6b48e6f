#include <catch_amalgamated.hpp>

// The reference implementations are only useful if they are right, so they
// get their own small checks against hand-worked values.

#include "oracles/cycle_index.hpp"
#include "oracles/naive_detector.hpp"
#include "oracles/naive_mis.hpp"

namespace {

ref::Matrix cycle(int n) {
  ref::Matrix m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) m[i][(i + 1) % n] = m[(i + 1) % n][i] = true;
  return m;
}

ref::Matrix star(int leaves) {
  ref::Matrix m(leaves + 1, std::vector<bool>(leaves + 1, false));
  for (int i = 1; i <= leaves; ++i) m[0][i] = m[i][0] = true;
  return m;
}

}  // namespace

TEST_CASE("cycle index counts", "[reference]") {
  // unlabelled graphs on 0..10 vertices
  const std::uint64_t known[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
  for (int n = 0; n <= 10; ++n) CHECK(ref::count_graphs(n) == known[n]);
}

TEST_CASE("tuple detector on small shapes", "[reference]") {
  CHECK(ref::contains_paths(cycle(6), {3, 3}));
  CHECK(ref::contains_paths(cycle(6), {6}));
  CHECK_FALSE(ref::contains_paths(cycle(6), {4, 3}));
  CHECK(ref::contains_paths(star(5), {3}));
  CHECK_FALSE(ref::contains_paths(star(5), {4}));
  CHECK_FALSE(ref::contains_paths(star(5), {3, 2}));
  CHECK(ref::contains_paths(star(5), {2}));
}

TEST_CASE("brute longest path", "[reference]") {
  CHECK(ref::longest_path(cycle(7)) == 7);
  CHECK(ref::longest_path(star(4)) == 3);
  CHECK(ref::longest_path(ref::Matrix{}) == 0);
}

TEST_CASE("subset MIS", "[reference]") {
  CHECK(ref::max_independent_set(cycle(5)) == 2);
  CHECK(ref::max_independent_set(cycle(8)) == 4);
  CHECK(ref::max_independent_set(star(6)) == 6);
  CHECK(ref::max_independent_set(ref::Matrix(4, std::vector<bool>(4, false))) == 4);
}
