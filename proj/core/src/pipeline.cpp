#include "boxcub/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "boxcub/bounds.hpp"
#include "boxcub/graph_invariants.hpp"

namespace boxcub {
namespace {

void check_partition(int n, const Bipartition& p) {
  if (static_cast<int>(p.a_side.size()) != n ||
      static_cast<int>(p.b_side.size()) != n || p.a_side.intersects(p.b_side) ||
      static_cast<int>((p.a_side | p.b_side).count()) != n) {
    throw std::invalid_argument("bipartition does not partition the vertex set");
  }
}

std::string claw_message(const Claw& c) {
  return "dimension graph has an induced claw: center " + std::to_string(c.center) +
         ", leaves " + std::to_string(c.leaves[0]) + " " +
         std::to_string(c.leaves[1]) + " " + std::to_string(c.leaves[2]);
}

ProperColoring choose_coloring(const Graph& g, const PipelineOptions& options) {
  switch (options.coloring_mode) {
    case ColoringMode::kExact:
      return exact_chromatic_coloring(g);
    case ColoringMode::kGreedy: {
      std::vector<int> order(g.num_vertices());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
      });
      return greedy_coloring(g, order);
    }
    case ColoringMode::kGiven:
      if (!options.coloring) throw std::invalid_argument("no coloring given");
      if (!is_proper_coloring(g, *options.coloring)) {
        throw std::invalid_argument("given coloring is not proper");
      }
      return *options.coloring;
  }
  throw std::invalid_argument("unknown coloring mode");
}

BoxRepresentation choose_box(const Graph& g, const PipelineOptions& options) {
  if (options.box_mode == BoxMode::kOracle) {
    return exact_boxicity(g, options.oracle_limit).witness;
  }
  if (!options.box_rep) throw std::invalid_argument("no box representation given");
  if (!verify_representation(*options.box_rep, g).equal()) {
    throw std::invalid_argument("given box representation does not verify");
  }
  return *options.box_rep;
}

}  // namespace

std::vector<Bipartition> binary_bipartitions(const ProperColoring& coloring) {
  const int n = static_cast<int>(coloring.colors.size());
  const int bits = coloring.chi_used <= 1 ? 0 : ceil_log2(coloring.chi_used);
  std::vector<Bipartition> out;
  for (int bit = 0; bit < bits; ++bit) {
    Bipartition p{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
      if ((coloring.colors[v] >> bit) & 1) {
        p.a_side.set(v);
      } else {
        p.b_side.set(v);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

Graph cobipartite_augment(const Graph& g, const Bipartition& p) {
  const int n = g.num_vertices();
  check_partition(n, p);
  Graph h = g;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (p.a_side[u] == p.a_side[v]) h.ensure_edge(u, v);
    }
  }
  return h;
}

std::vector<IntervalRepresentation> cobipartize_box_representation(
    const BoxRepresentation& rep, const Graph& g, const Bipartition& p) {
  const int n = g.num_vertices();
  check_partition(n, p);
  if (rep.dims.empty()) {
    throw std::invalid_argument("cobipartization needs at least one dimension");
  }
  if (rep.n != n || !verify_representation(rep, g).equal()) {
    throw std::invalid_argument("box representation does not verify");
  }
  std::vector<IntervalRepresentation> out;
  for (const auto& dim : rep.dims) {
    Rational low = dim.intervals.front().lo;
    Rational high = dim.intervals.front().hi;
    for (const auto& iv : dim.intervals) {
      low = std::min(low, iv.lo);
      high = std::max(high, iv.hi);
    }
    const Rational below = low - 1;
    const Rational above = high + 1;
    IntervalRepresentation first;
    IntervalRepresentation second;
    first.intervals.reserve(n);
    second.intervals.reserve(n);
    for (int v = 0; v < n; ++v) {
      const Interval& iv = dim.intervals[v];
      if (p.a_side[v]) {
        first.intervals.push_back({iv.lo, above});
        second.intervals.push_back({below, iv.hi});
      } else {
        first.intervals.push_back({below, iv.hi});
        second.intervals.push_back({iv.lo, above});
      }
    }
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  }
  return out;
}

ClawError::ClawError(const Claw& claw)
    : std::invalid_argument(claw_message(claw)), claw_(claw) {}

UnitIntervalRepresentation unitize_claw_free_dimension(
    const IntervalRepresentation& rep) {
  const Graph g = dimension_graph(rep);
  auto ordering = proper_ordering_from_clique_path(g, clique_path_of(rep));
  if (const Claw* claw = std::get_if<Claw>(&ordering)) throw ClawError(*claw);
  return realize_unit_intervals(g, std::get<std::vector<int>>(ordering));
}

std::vector<std::vector<UnitIntervalRepresentation>> color_class_unit_graphs(
    const ProperColoring& coloring) {
  const int n = static_cast<int>(coloring.colors.size());
  std::vector<std::vector<UnitIntervalRepresentation>> out;
  for (const std::vector<int>& members : coloring.classes()) {
    const int gadgets = ceil_log2(static_cast<std::int64_t>(members.size()));
    std::vector<UnitIntervalRepresentation> per_class;
    for (int j = 0; j < gadgets; ++j) {
      UnitIntervalRepresentation w;
      w.lefts.assign(n, Rational(1));
      for (int number = 0; number < static_cast<int>(members.size()); ++number) {
        w.lefts[members[number]] = ((number >> j) & 1) ? Rational(0) : Rational(2);
      }
      per_class.push_back(std::move(w));
    }
    out.push_back(std::move(per_class));
  }
  return out;
}

CubeConstruction construct_cube_representation(const Graph& g,
                                               const PipelineOptions& options) {
  const int n = g.num_vertices();
  CubeConstruction result;
  result.cube.n = n;
  ConstructionReport& report = result.report;
  if (n == 0) {
    report.verified = true;
    return result;
  }

  const ProperColoring coloring = choose_coloring(g, options);
  const BoxRepresentation box = choose_box(g, options);
  report.alpha = options.alpha ? *options.alpha : exact_independence_number(g);
  report.b_used = static_cast<int>(box.dims.size());
  report.chi_used = coloring.chi_used;
  for (const auto& members : coloring.classes()) {
    report.class_sizes.push_back(static_cast<int>(members.size()));
  }
  const bool coloring_exact =
      options.coloring_mode == ColoringMode::kExact ||
      (options.coloring_mode == ColoringMode::kGiven && options.coloring_is_optimal);
  const bool box_exact =
      options.box_mode == BoxMode::kOracle || options.box_is_optimal;
  report.exact_parameters = coloring_exact && box_exact;

  if (report.b_used > 0) {
    for (const Bipartition& p : binary_bipartitions(coloring)) {
      for (const auto& dim : cobipartize_box_representation(box, g, p)) {
        result.cube.dims.push_back(unitize_claw_free_dimension(dim));
        ++report.u_dims;
      }
    }
  }
  for (auto& per_class : color_class_unit_graphs(coloring)) {
    for (auto& gadget : per_class) {
      result.cube.dims.push_back(std::move(gadget));
      ++report.w_dims;
    }
  }
  report.total_dims = report.u_dims + report.w_dims;
  report.theorem_bound =
      theorem_upper_bound(report.chi_used, report.alpha, report.b_used);
  report.verdict = verify_representation(result.cube, g);
  report.verified = report.verdict.equal();
  return result;
}

Json report_to_json(const ConstructionReport& report) {
  Json j;
  j["b_used"] = report.b_used;
  j["chi_used"] = report.chi_used;
  j["class_sizes"] = report.class_sizes;
  j["u_dims"] = report.u_dims;
  j["w_dims"] = report.w_dims;
  j["total_dims"] = report.total_dims;
  j["alpha"] = report.alpha;
  j["theorem_bound"] = report.theorem_bound;
  j["parameters"] = report.exact_parameters ? "exact" : "heuristic";
  j["verified"] = report.verified;
  if (!report.verified) {
    auto edges = [](const std::vector<Edge>& list) {
      Json a = Json::array();
      for (const Edge& e : list) a.push_back(Json::array({e.u, e.v}));
      return a;
    };
    j["missing_edges"] = edges(report.verdict.missing_edges);
    j["extra_edges"] = edges(report.verdict.extra_edges);
  }
  return j;
}

}  // namespace boxcub
