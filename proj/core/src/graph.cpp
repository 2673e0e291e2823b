#include "boxcub/graph.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace boxcub {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const std::size_t n = rows.size();
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v].size() != n || rows[v][v]) {
      throw std::invalid_argument("malformed adjacency row " + std::to_string(v));
    }
    for (auto w = rows[v].find_first(); w != VertexSet::npos;
         w = rows[v].find_next(w)) {
      if (!rows[w][v]) throw std::invalid_argument("asymmetric adjacency");
    }
    degree_sum += rows[v].count();
  }
  Graph g;
  g.adjacency_ = std::move(rows);
  g.num_edges_ = static_cast<int>(degree_sum / 2);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for n=" +
                                std::to_string(num_vertices()));
  }
}

std::vector<int> Graph::neighbor_list(int v) const {
  std::vector<int> out;
  out.reserve(adjacency_[v].count());
  for (auto w = adjacency_[v].find_first(); w != VertexSet::npos;
       w = adjacency_[v].find_next(w)) {
    out.push_back(static_cast<int>(w));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos;
         v = adjacency_[u].find_next(v)) {
      out.emplace_back(u, static_cast<int>(v));
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  const int n = num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!adjacency_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const {
  const long long n = num_vertices();
  return num_edges_ == n * (n - 1) / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (adjacency_[u][v]) {
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++num_edges_;
}

void Graph::ensure_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (adjacency_[u][v]) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++num_edges_;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph h(k);
  for (int i = 0; i < k; ++i) {
    check_vertex(vertices[i]);
    for (int j = i + 1; j < k; ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph Graph::complement() const {
  const int n = num_vertices();
  Graph h(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

std::vector<std::vector<int>> ProperColoring::classes() const {
  std::vector<std::vector<int>> out(chi_used);
  for (int v = 0; v < static_cast<int>(colors.size()); ++v) {
    out[colors[v]].push_back(v);
  }
  return out;
}

bool is_proper_coloring(const Graph& g, const ProperColoring& coloring) {
  const int n = g.num_vertices();
  if (static_cast<int>(coloring.colors.size()) != n) return false;
  if (n == 0) return coloring.chi_used == 0;
  std::vector<bool> used(coloring.chi_used, false);
  for (int c : coloring.colors) {
    if (c < 0 || c >= coloring.chi_used) return false;
    used[c] = true;
  }
  for (bool u : used) {
    if (!u) return false;
  }
  for (const Edge& e : g.edges()) {
    if (coloring.colors[e.u] == coloring.colors[e.v]) return false;
  }
  return true;
}

ProperColoring normalize_coloring(std::vector<int> colors) {
  std::unordered_map<int, int> remap;
  for (int& c : colors) {
    auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
    c = it->second;
  }
  ProperColoring out;
  out.chi_used = static_cast<int>(remap.size());
  out.colors = std::move(colors);
  return out;
}

}  // namespace boxcub
