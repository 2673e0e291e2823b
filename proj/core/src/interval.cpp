#include "boxcub/interval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boxcub {
namespace {

std::vector<VertexSet> empty_rows(int n) {
  return std::vector<VertexSet>(n, VertexSet(n));
}

std::vector<VertexSet> full_rows(int n) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (int v = 0; v < n; ++v) {
    rows[v].set();
    rows[v].reset(v);
  }
  return rows;
}

// Sweep in order of left endpoint: every later vertex whose left endpoint is
// at most hi(v) intersects v, and no other later vertex does.
template <typename LeftOf, typename RightOf>
std::vector<VertexSet> sweep_rows(int n, LeftOf left, RightOf right) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return left(a) < left(b); });
  std::vector<VertexSet> rows = empty_rows(n);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    const Rational hi = right(v);
    for (int j = i + 1; j < n && left(order[j]) <= hi; ++j) {
      rows[v].set(order[j]);
      rows[order[j]].set(v);
    }
  }
  return rows;
}

std::vector<VertexSet> rows_of(const IntervalRepresentation& rep) {
  return sweep_rows(
      rep.num_vertices(),
      [&](int v) -> const Rational& { return rep.intervals[v].lo; },
      [&](int v) -> const Rational& { return rep.intervals[v].hi; });
}

std::vector<VertexSet> rows_of(const UnitIntervalRepresentation& rep) {
  return sweep_rows(
      rep.num_vertices(),
      [&](int v) -> const Rational& { return rep.lefts[v]; },
      [&](int v) { return rep.lefts[v] + 1; });
}

void check_count(int expected, int actual) {
  if (expected != actual) {
    throw std::invalid_argument("dimension has " + std::to_string(actual) +
                                " vertices, expected " +
                                std::to_string(expected));
  }
}

template <typename Dims>
Graph intersect_dims(int n, const Dims& dims) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<VertexSet> rows = full_rows(n);
  for (const auto& dim : dims) {
    check_count(n, dim.num_vertices());
    const std::vector<VertexSet> dim_rows = rows_of(dim);
    for (int v = 0; v < n; ++v) rows[v] &= dim_rows[v];
  }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace

IntervalRepresentation UnitIntervalRepresentation::as_intervals() const {
  IntervalRepresentation out;
  out.intervals.reserve(lefts.size());
  for (const Rational& l : lefts) out.intervals.push_back({l, l + 1});
  return out;
}

BoxRepresentation CubeRepresentation::as_box() const {
  BoxRepresentation out;
  out.n = n;
  for (const auto& dim : dims) out.dims.push_back(dim.as_intervals());
  return out;
}

void check_well_formed(const IntervalRepresentation& rep) {
  for (int v = 0; v < rep.num_vertices(); ++v) {
    if (rep.intervals[v].hi < rep.intervals[v].lo) {
      throw std::invalid_argument("interval of vertex " + std::to_string(v) +
                                  " has lo > hi");
    }
  }
}

Graph dimension_graph(const IntervalRepresentation& rep) {
  check_well_formed(rep);
  return Graph::from_adjacency(rows_of(rep));
}

Graph dimension_graph(const UnitIntervalRepresentation& rep) {
  return Graph::from_adjacency(rows_of(rep));
}

Graph intersection_graph(const BoxRepresentation& rep) {
  for (const auto& dim : rep.dims) check_well_formed(dim);
  return intersect_dims(rep.n, rep.dims);
}

Graph intersection_graph(const CubeRepresentation& rep) {
  return intersect_dims(rep.n, rep.dims);
}

Verdict compare_graphs(const Graph& actual, const Graph& expected) {
  check_count(expected.num_vertices(), actual.num_vertices());
  Verdict verdict;
  const int n = expected.num_vertices();
  for (int u = 0; u < n; ++u) {
    const VertexSet diff = actual.neighbors(u) ^ expected.neighbors(u);
    for (auto v = diff.find_next(u); v != VertexSet::npos;
         v = diff.find_next(v)) {
      const int w = static_cast<int>(v);
      if (expected.adjacent(u, w)) {
        verdict.missing_edges.emplace_back(u, w);
      } else {
        verdict.extra_edges.emplace_back(u, w);
      }
    }
  }
  return verdict;
}

Verdict verify_representation(const BoxRepresentation& rep, const Graph& g) {
  check_count(g.num_vertices(), rep.n);
  return compare_graphs(intersection_graph(rep), g);
}

Verdict verify_representation(const CubeRepresentation& rep, const Graph& g) {
  check_count(g.num_vertices(), rep.n);
  return compare_graphs(intersection_graph(rep), g);
}

}  // namespace boxcub
