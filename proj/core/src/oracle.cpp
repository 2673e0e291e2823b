#include "boxcub/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "boxcub/recognition.hpp"
#include "boxcub/set_cover.hpp"

namespace boxcub {
namespace {

enum class Kind { kInterval, kUnit };

void check_limit(const Graph& g, int max_n) {
  const int n = g.num_vertices();
  const int limit = std::min(max_n, kOracleHardLimit);
  if (n > limit) {
    throw OracleLimitError("graph has " + std::to_string(n) +
                           " vertices; exact oracle limit is " +
                           std::to_string(limit));
  }
}

// Rightmost position each position reaches in the closure of `order`.
// Interval closure: i is joined to every position up to its rightmost later
// neighbor. Unit closure additionally makes the reach non-decreasing.
std::vector<int> closure_reach(const Graph& g, const std::vector<int>& order,
                               const std::vector<int>& pos, Kind kind) {
  const int n = g.num_vertices();
  std::vector<int> reach(n);
  int running = 0;
  for (int i = 0; i < n; ++i) {
    int r = i;
    const VertexSet& nb = g.neighbors(order[i]);
    for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
      r = std::max(r, pos[w]);
    }
    if (kind == Kind::kUnit) {
      running = std::max(running, r);
      r = running;
    }
    reach[i] = r;
  }
  return reach;
}

struct BreakSets {
  std::vector<Edge> non_edges;
  // Maximal break sets, ascending, each with the first ordering producing it.
  std::vector<ElementMask> masks;
  std::vector<std::vector<int>> orderings;
};

BreakSets enumerate_break_sets(const Graph& g, Kind kind) {
  const int n = g.num_vertices();
  BreakSets out;
  out.non_edges = g.non_edges();
  std::vector<std::vector<int>> bit_of(n, std::vector<int>(n, -1));
  for (int b = 0; b < static_cast<int>(out.non_edges.size()); ++b) {
    const Edge& e = out.non_edges[b];
    bit_of[e.u][e.v] = bit_of[e.v][e.u] = b;
  }

  std::map<ElementMask, std::vector<int>> first_ordering;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(n);
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    const std::vector<int> reach = closure_reach(g, order, pos, kind);
    ElementMask broken = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = reach[i] + 1; j < n; ++j) {
        const int b = bit_of[order[i]][order[j]];
        if (b >= 0) broken |= ElementMask{1} << b;
      }
    }
    if (broken != 0) first_ordering.try_emplace(broken, order);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<ElementMask> all;
  all.reserve(first_ordering.size());
  for (const auto& [mask, unused] : first_ordering) all.push_back(mask);
  out.masks = maximal_sets(std::move(all));
  for (ElementMask m : out.masks) out.orderings.push_back(first_ordering.at(m));
  return out;
}

Graph closure_graph(const Graph& g, const std::vector<int>& order, Kind kind) {
  const int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  const std::vector<int> reach = closure_reach(g, order, pos, kind);
  Graph h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= reach[i]; ++j) h.ensure_edge(order[i], order[j]);
  }
  return h;
}

// Indices of the chosen break sets.
std::vector<int> solve_cover(const BreakSets& sets) {
  const int m = static_cast<int>(sets.non_edges.size());
  const ElementMask universe =
      m == 64 ? ~ElementMask{0} : (ElementMask{1} << m) - 1;
  auto cover = minimum_set_cover(sets.masks, universe);
  if (!cover) {
    throw std::logic_error("break sets do not cover every non-edge");
  }
  return *cover;
}

}  // namespace

BoxicityResult exact_boxicity(const Graph& g, int max_n) {
  const int n = g.num_vertices();
  BoxicityResult result;
  result.witness.n = n;
  if (g.is_complete()) return result;
  check_limit(g, max_n);

  const BreakSets sets = enumerate_break_sets(g, Kind::kInterval);
  for (int index : solve_cover(sets)) {
    const std::vector<int>& order = sets.orderings[index];
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    const std::vector<int> reach = closure_reach(g, order, pos, Kind::kInterval);
    IntervalRepresentation dim;
    dim.intervals.resize(n);
    for (int i = 0; i < n; ++i) {
      dim.intervals[order[i]] = Interval{Rational(i), Rational(reach[i])};
    }
    result.witness.dims.push_back(std::move(dim));
  }
  result.boxicity = static_cast<int>(result.witness.dims.size());
  if (!verify_representation(result.witness, g).equal()) {
    throw std::logic_error("boxicity witness does not verify");
  }
  return result;
}

CubicityResult exact_cubicity(const Graph& g, int max_n) {
  CubicityResult result;
  result.witness.n = g.num_vertices();
  if (g.is_complete()) return result;
  check_limit(g, max_n);

  const BreakSets sets = enumerate_break_sets(g, Kind::kUnit);
  for (int index : solve_cover(sets)) {
    const std::vector<int>& order = sets.orderings[index];
    result.witness.dims.push_back(
        realize_unit_intervals(closure_graph(g, order, Kind::kUnit), order));
  }
  result.cubicity = static_cast<int>(result.witness.dims.size());
  if (!verify_representation(result.witness, g).equal()) {
    throw std::logic_error("cubicity witness does not verify");
  }
  return result;
}

}  // namespace boxcub
