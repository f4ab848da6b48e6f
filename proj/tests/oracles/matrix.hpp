#pragma once

#include <vector>

#include "turan/graph.hpp"

namespace ref {

// Copy into a plain matrix so the references never touch bit rows.
inline std::vector<std::vector<bool>> to_matrix(const turan::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const turan::Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

}  // namespace ref
