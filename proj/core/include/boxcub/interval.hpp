#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "boxcub/graph.hpp"

namespace boxcub {

// Exact endpoint arithmetic. boost::rational keeps values reduced with a
// positive denominator.
using Rational = boost::rational<std::int64_t>;

// Closed interval [lo, hi]; touching endpoints intersect.
struct Interval {
  Rational lo;
  Rational hi;

  bool intersects(const Interval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalRepresentation {
  std::vector<Interval> intervals;

  int num_vertices() const { return static_cast<int>(intervals.size()); }
  friend bool operator==(const IntervalRepresentation&,
                         const IntervalRepresentation&) = default;
};

// Vertex v occupies [lefts[v], lefts[v] + 1].
struct UnitIntervalRepresentation {
  std::vector<Rational> lefts;

  int num_vertices() const { return static_cast<int>(lefts.size()); }
  IntervalRepresentation as_intervals() const;
  friend bool operator==(const UnitIntervalRepresentation&,
                         const UnitIntervalRepresentation&) = default;
};

// `n` is carried explicitly so that zero dimensions (the complete graph)
// still know their vertex count.
struct BoxRepresentation {
  int n = 0;
  std::vector<IntervalRepresentation> dims;
};

struct CubeRepresentation {
  int n = 0;
  std::vector<UnitIntervalRepresentation> dims;

  BoxRepresentation as_box() const;
};

// Throws std::invalid_argument if some interval has lo > hi.
void check_well_formed(const IntervalRepresentation& rep);

Graph dimension_graph(const IntervalRepresentation& rep);
Graph dimension_graph(const UnitIntervalRepresentation& rep);

// Edge iff present in every dimension; zero dimensions give K_n. Throws
// std::invalid_argument when a dimension's vertex count differs from `n`.
Graph intersection_graph(const BoxRepresentation& rep);
Graph intersection_graph(const CubeRepresentation& rep);

struct Verdict {
  // Edges of the graph that the representation does not produce.
  std::vector<Edge> missing_edges;
  // Edges the representation produces that the graph does not have.
  std::vector<Edge> extra_edges;

  bool equal() const { return missing_edges.empty() && extra_edges.empty(); }
};

// Throws std::invalid_argument on a vertex-count mismatch.
Verdict verify_representation(const BoxRepresentation& rep, const Graph& g);
Verdict verify_representation(const CubeRepresentation& rep, const Graph& g);

// Symmetric difference between two graphs on the same vertex set, reported
// from the point of view of `expected`.
Verdict compare_graphs(const Graph& actual, const Graph& expected);

}  // namespace boxcub
