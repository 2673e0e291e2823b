#pragma once

#include <span>
#include <vector>

#include "boxcub/graph.hpp"

namespace boxcub {

// Maximum independent set by branch and bound (greedy-coloring bound on the
// complement, vertices pre-sorted by degree). Exponential; intended for
// n <= 50 unless the graph is very structured. Returned ascending.
std::vector<int> maximum_independent_set(const Graph& g);
int exact_independence_number(const Graph& g);

// Maximum clique, same search on `g` itself. Returned ascending.
std::vector<int> maximum_clique(const Graph& g);

// Minimum proper coloring by DSATUR branch and bound seeded with a maximum
// clique. Colors are renumbered by first occurrence in vertex order, so the
// output is a deterministic function of the graph. Intended for n <= 30.
ProperColoring exact_chromatic_coloring(const Graph& g);

// First-fit coloring along `order`. Throws std::invalid_argument if `order`
// is not a permutation of 0..n-1.
ProperColoring greedy_coloring(const Graph& g, std::span<const int> order);

struct DiameterInfo {
  // Largest finite distance between two vertices; for disconnected graphs
  // the maximum over components.
  int diameter = 0;
  bool connected = true;
};

DiameterInfo diameter(const Graph& g);

// Components as ascending vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace boxcub
