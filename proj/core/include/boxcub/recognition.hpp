#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "boxcub/graph.hpp"
#include "boxcub/interval.hpp"

namespace boxcub {

using Clique = std::vector<int>;

// Bron-Kerbosch with Tomita pivoting. Each clique is ascending and the list
// is sorted lexicographically.
std::vector<Clique> maximal_cliques(const Graph& g);

// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const Graph& g);

// Arrangements of maximal cliques in which the cliques containing any one
// vertex are consecutive. Both return indices into `cliques`.
//
// The exhaustive variant backtracks over clique sequences (complete, used up
// to kExhaustiveCliqueLimit cliques). The orientation variant transitively
// orients the complement and orders cliques by the orientation of the
// non-edges between them; it is polynomial and requires a chordal graph.
inline constexpr int kExhaustiveCliqueLimit = 10;
std::optional<std::vector<int>> arrange_cliques_exhaustive(
    const Graph& g, const std::vector<Clique>& cliques);
std::optional<std::vector<int>> arrange_cliques_by_orientation(
    const Graph& g, const std::vector<Clique>& cliques);

// Maximal cliques in consecutive order, or nullopt if `g` is not an
// interval graph.
std::optional<std::vector<Clique>> find_clique_path(const Graph& g);

// On success the dimension graph of the result equals `g`. Vertex v gets
// [first, last] where first/last index the cliques of the path holding v.
std::optional<IntervalRepresentation> find_interval_representation(
    const Graph& g);

// On success every interval has length 1 and the dimension graph equals `g`.
std::optional<UnitIntervalRepresentation> find_unit_interval_representation(
    const Graph& g);

struct Claw {
  int center = 0;
  std::array<int, 3> leaves{};
};

// Brute-force search for an induced K_{1,3}.
std::optional<Claw> find_claw(const Graph& g);

// Maximal cliques of the graph represented by `rep`, in left-to-right order.
std::vector<Clique> clique_path_of(const IntervalRepresentation& rep);

// Given the graph `g` and a consecutive clique arrangement for it, returns an
// ordering whose closed neighborhoods are contiguous, or an induced claw
// proving that none exists.
std::variant<std::vector<int>, Claw> proper_ordering_from_clique_path(
    const Graph& g, const std::vector<Clique>& path);

// True iff every closed neighborhood is a contiguous block of `order`.
bool is_proper_ordering(const Graph& g, std::span<const int> order);

// Unit representation from a proper ordering. Vertices are split into
// breadth-first layers along the ordering (each layer is a clique and edges
// only join consecutive layers); layer t occupies [t, t+1) and offsets within
// a layer are ranks in a merged order that puts each vertex just ahead of its
// leftmost neighbor in the previous layer. All endpoints are multiples of
// 1/(n+1). Vertices with equal closed neighborhoods share the interval of
// the first of them in `order`. Throws std::invalid_argument if `order` is
// not proper.
UnitIntervalRepresentation realize_unit_intervals(const Graph& g,
                                                  std::span<const int> order);

}  // namespace boxcub
