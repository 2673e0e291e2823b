#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "boxcub/graph.hpp"

namespace boxcub {

// Vertex numbering used by every generator:
//  - star(n): center is 0, leaves are 1..n.
//  - complete_multipartite(parts): parts are consecutive blocks, part 0
//    first.
//  - path_star_glue(n): star center 0, star leaves 1..n; the path runs
//    n, n+1, ..., 3n, so it starts at leaf n and has 2n+1 vertices.
Graph star(int leaves);
Graph complete_multipartite(std::span<const int> parts);
Graph path_star_glue(int n);
Graph complete(int n);
Graph edgeless(int n);

struct StarFamily { int leaves; };
struct MultipartiteFamily { std::vector<int> parts; };
struct PathStarGlueFamily { int n; };
struct CompleteFamily { int n; };
struct EdgelessFamily { int n; };

using FamilySpec = std::variant<StarFamily, MultipartiteFamily,
                                PathStarGlueFamily, CompleteFamily,
                                EdgelessFamily>;

// Throws std::invalid_argument on non-positive sizes.
Graph make_family(const FamilySpec& spec);

// Each pair {u,v}, taken in lexicographic order, becomes an edge when the
// next 64-bit draw from `rng` is below p * 2^64. The draw sequence is fixed
// by the engine, so a seed reproduces the graph on any platform.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Two cliques of sizes `a` and `n - a` (a drawn uniformly) with random
// cross edges at probability p.
Graph random_cobipartite(int n, double p, std::mt19937_64& rng);

// Random bipartition (each vertex flips a fair coin) with random cross edges
// at probability p.
Graph random_bipartite(int n, double p, std::mt19937_64& rng);

}  // namespace boxcub
