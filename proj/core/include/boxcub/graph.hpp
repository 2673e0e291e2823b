#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace boxcub {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Unordered vertex pair, always stored with first < second.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 backed by an adjacency matrix of
// bitsets. Adding an edge that already exists or a self-loop is an error.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws std::invalid_argument on self-loops, duplicates or ids out of range.
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Rows must form a symmetric matrix with an empty diagonal.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }

  bool adjacent(int u, int v) const { return adjacency_[u][v]; }
  const VertexSet& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].count()); }
  std::vector<int> neighbor_list(int v) const;

  // Edges sorted lexicographically.
  std::vector<Edge> edges() const;
  // Pairs {u,v}, u < v, that are not edges, sorted lexicographically.
  std::vector<Edge> non_edges() const;

  bool is_complete() const;

  void add_edge(int u, int v);
  // Adds the edge unless already present; self-loops are still rejected.
  void ensure_edge(int u, int v);

  // Subgraph induced by `vertices`, renumbered in the given order.
  Graph induced(std::span<const int> vertices) const;
  Graph complement() const;

  VertexSet empty_set() const { return VertexSet(adjacency_.size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adjacency_;
  int num_edges_ = 0;
};

// Vertex -> color index in 0..chi_used-1, every index used at least once.
struct ProperColoring {
  std::vector<int> colors;
  int chi_used = 0;

  // Vertices of each color class, ascending by vertex id.
  std::vector<std::vector<int>> classes() const;
};

// True iff `coloring` has one entry per vertex, no monochromatic edge, and
// uses exactly the indices 0..chi_used-1.
bool is_proper_coloring(const Graph& g, const ProperColoring& coloring);

// Renumbers colors by first occurrence in vertex order so that the result
// satisfies the ProperColoring index invariant.
ProperColoring normalize_coloring(std::vector<int> colors);

}  // namespace boxcub
