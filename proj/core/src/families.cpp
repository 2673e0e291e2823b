#include "boxcub/families.hpp"

#include <limits>
#include <stdexcept>

namespace boxcub {
namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

bool draw(double p, std::mt19937_64& rng) {
  if (p <= 0.0) {
    rng();
    return false;
  }
  if (p >= 1.0) {
    rng();
    return true;
  }
  const auto threshold = static_cast<std::uint64_t>(
      p * static_cast<double>(std::numeric_limits<std::uint64_t>::max()));
  return rng() < threshold;
}

}  // namespace

Graph star(int leaves) {
  require_positive(leaves, "star size");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("no parts given");
  std::vector<int> part_of;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    require_positive(parts[i], "part size");
    part_of.insert(part_of.end(), parts[i], i);
  }
  const int n = static_cast<int>(part_of.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph path_star_glue(int n) {
  require_positive(n, "path_star_glue parameter");
  Graph g(3 * n + 1);
  for (int v = 1; v <= n; ++v) g.add_edge(0, v);
  for (int v = n; v < 3 * n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(int n) {
  require_positive(n, "complete graph size");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph edgeless(int n) {
  require_positive(n, "edgeless graph size");
  return Graph(n);
}

Graph make_family(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const StarFamily& f) const { return star(f.leaves); }
    Graph operator()(const MultipartiteFamily& f) const {
      return complete_multipartite(f.parts);
    }
    Graph operator()(const PathStarGlueFamily& f) const {
      return path_star_glue(f.n);
    }
    Graph operator()(const CompleteFamily& f) const { return complete(f.n); }
    Graph operator()(const EdgelessFamily& f) const { return edgeless(f.n); }
  };
  return std::visit(Visitor{}, spec);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (draw(p, rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_cobipartite(int n, double p, std::mt19937_64& rng) {
  const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same_side = (u < a) == (v < a);
      if (same_side || draw(p, rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_bipartite(int n, double p, std::mt19937_64& rng) {
  std::vector<bool> side(n);
  for (int v = 0; v < n; ++v) side[v] = (rng() & 1u) != 0;
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (side[u] != side[v] && draw(p, rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace boxcub
