#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "boxcub/bounds.hpp"
#include "boxcub/families.hpp"
#include "boxcub/graph_invariants.hpp"
#include "boxcub/pipeline.hpp"
#include "support/brute_force.hpp"

namespace boxcub {
namespace {

using testing::for_each_graph;

VertexSet make_set(int n, std::vector<int> members) {
  VertexSet s(n);
  for (int v : members) s.set(v);
  return s;
}

Bipartition make_partition(int n, std::vector<int> a_members) {
  VertexSet a = make_set(n, std::move(a_members));
  VertexSet b = ~a;
  return {a, b};
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

bool is_supergraph(const Graph& big, const Graph& small) {
  for (const Edge& e : small.edges()) {
    if (!big.adjacent(e.u, e.v)) return false;
  }
  return true;
}

bool cobipartite_wrt(const Graph& g, const Bipartition& p) {
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      if (p.a_side[u] == p.a_side[v] && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

BoxRepresentation k22_box() {
  BoxRepresentation rep;
  rep.n = 4;
  auto dim = [](std::vector<std::pair<int, int>> spans) {
    IntervalRepresentation d;
    for (auto [lo, hi] : spans) d.intervals.push_back({Rational(lo), Rational(hi)});
    return d;
  };
  rep.dims.push_back(dim({{0, 1}, {2, 3}, {0, 3}, {0, 3}}));
  rep.dims.push_back(dim({{0, 3}, {0, 3}, {0, 1}, {2, 3}}));
  return rep;
}

TEST(BipartitionTest, TwoColors) {
  const ProperColoring c{{0, 1, 1, 0}, 2};
  const auto parts = binary_bipartitions(c);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].a_side, make_set(4, {1, 2}));
  EXPECT_EQ(parts[0].b_side, make_set(4, {0, 3}));
}

TEST(BipartitionTest, OneColor) {
  EXPECT_TRUE(binary_bipartitions(ProperColoring{{0, 0, 0}, 1}).empty());
}

TEST(BipartitionTest, FourColors) {
  const ProperColoring c{{0, 1, 2, 3}, 4};
  const auto parts = binary_bipartitions(c);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].a_side, make_set(4, {1, 3}));
  EXPECT_EQ(parts[1].a_side, make_set(4, {2, 3}));
}

TEST(BipartitionTest, DistinctColorsDifferInSomeBit) {
  const ProperColoring c{{0, 1, 2, 3, 4, 2}, 5};
  const auto parts = binary_bipartitions(c);
  EXPECT_EQ(parts.size(), 3u);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      bool split = false;
      for (const auto& p : parts) split |= p.a_side[u] != p.a_side[v];
      EXPECT_EQ(split, c.colors[u] != c.colors[v]);
    }
  }
}

TEST(AugmentTest, EdgelessGraph) {
  const Graph h = cobipartite_augment(edgeless(4), make_partition(4, {0, 1}));
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(AugmentTest, FourCycleBecomesComplete) {
  EXPECT_EQ(cobipartite_augment(cycle(4), make_partition(4, {0, 2})), complete(4));
}

TEST(AugmentTest, OneSidedPartition) {
  EXPECT_EQ(cobipartite_augment(cycle(5), make_partition(5, {0, 1, 2, 3, 4})),
            complete(5));
}

TEST(AugmentTest, RejectsNonPartition) {
  Bipartition p{make_set(3, {0, 1}), make_set(3, {1, 2})};
  EXPECT_THROW(cobipartite_augment(edgeless(3), p), std::invalid_argument);
}

TEST(CobipartizeTest, K22GivesFourDimensionsForK4) {
  const Graph g = complete_multipartite(std::vector<int>{2, 2});
  const Bipartition p = make_partition(4, {0, 1});
  const auto dims = cobipartize_box_representation(k22_box(), g, p);
  ASSERT_EQ(dims.size(), 4u);
  BoxRepresentation out{4, dims};
  EXPECT_EQ(intersection_graph(out), complete(4));
  EXPECT_EQ(intersection_graph(out), cobipartite_augment(g, p));
}

TEST(CobipartizeTest, PostconditionsOnRandomInputs) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.5, rng);
    if (g.is_complete()) continue;
    const BoxRepresentation rep = exact_boxicity(g).witness;
    std::vector<int> a;
    for (int v = 0; v < n; ++v) {
      if (rng() & 1u) a.push_back(v);
    }
    const Bipartition p = make_partition(n, a);
    const Graph h = cobipartite_augment(g, p);
    const auto dims = cobipartize_box_representation(rep, g, p);
    EXPECT_EQ(dims.size(), 2 * rep.dims.size());
    for (const auto& dim : dims) {
      const Graph d = dimension_graph(dim);
      EXPECT_TRUE(is_supergraph(d, h));
      EXPECT_TRUE(cobipartite_wrt(d, p));
    }
    EXPECT_EQ(intersection_graph(BoxRepresentation{n, dims}), h);
  }
}

TEST(CobipartizeTest, Guards) {
  const Graph g = complete_multipartite(std::vector<int>{2, 2});
  const Bipartition p = make_partition(4, {0, 1});
  BoxRepresentation empty;
  empty.n = 4;
  EXPECT_THROW(cobipartize_box_representation(empty, complete(4), p),
               std::invalid_argument);
  BoxRepresentation wrong = k22_box();
  wrong.dims.pop_back();
  EXPECT_THROW(cobipartize_box_representation(wrong, g, p), std::invalid_argument);
}

TEST(UnitizeTest, CliqueCollapses) {
  IntervalRepresentation rep;
  rep.intervals = {{Rational(0), Rational(5)},
                   {Rational(2), Rational(3)},
                   {Rational(1), Rational(4)}};
  const auto unit = unitize_claw_free_dimension(rep);
  EXPECT_EQ(unit.lefts, (std::vector<Rational>(3, Rational(0))));
}

TEST(UnitizeTest, RayExtendedK22Dimensions) {
  const Graph g = complete_multipartite(std::vector<int>{2, 2});
  for (const auto& a : {std::vector<int>{0, 1}, std::vector<int>{0, 2}}) {
    const auto dims = cobipartize_box_representation(k22_box(), g, make_partition(4, a));
    for (const auto& dim : dims) {
      EXPECT_EQ(dimension_graph(unitize_claw_free_dimension(dim)), dimension_graph(dim));
    }
  }
}

TEST(UnitizeTest, ClawIsReported) {
  IntervalRepresentation rep;
  rep.intervals = {{Rational(0), Rational(10)},
                   {Rational(0), Rational(1)},
                   {Rational(4), Rational(5)},
                   {Rational(8), Rational(9)}};
  try {
    unitize_claw_free_dimension(rep);
    FAIL() << "expected ClawError";
  } catch (const ClawError& e) {
    EXPECT_EQ(e.claw().center, 0);
    std::vector<int> leaves(e.claw().leaves.begin(), e.claw().leaves.end());
    std::sort(leaves.begin(), leaves.end());
    EXPECT_EQ(leaves, (std::vector<int>{1, 2, 3}));
    EXPECT_NE(std::string(e.what()).find("center 0"), std::string::npos);
  }
}

TEST(GadgetTest, SingletonClassHasNoGadgets) {
  const auto gadgets = color_class_unit_graphs(ProperColoring{{0, 1, 1}, 2});
  ASSERT_EQ(gadgets.size(), 2u);
  EXPECT_TRUE(gadgets[0].empty());
  EXPECT_EQ(gadgets[1].size(), 1u);
}

TEST(GadgetTest, TwoMemberClass) {
  // Class 1 is {3,5}: vertex 3 is member 0, vertex 5 is member 1.
  const ProperColoring c{{0, 0, 0, 1, 0, 1}, 2};
  const auto gadgets = color_class_unit_graphs(c);
  ASSERT_EQ(gadgets[1].size(), 1u);
  const auto& w = gadgets[1][0];
  EXPECT_EQ(w.lefts[5], Rational(0));
  EXPECT_EQ(w.lefts[3], Rational(2));
  for (int v : {0, 1, 2, 4}) EXPECT_EQ(w.lefts[v], Rational(1));
}

TEST(GadgetTest, EdgelessClassSeparatesAllPairs) {
  const auto gadgets = color_class_unit_graphs(ProperColoring{{0, 0, 0, 0}, 1});
  ASSERT_EQ(gadgets.size(), 1u);
  ASSERT_EQ(gadgets[0].size(), 2u);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      bool separated = false;
      for (const auto& w : gadgets[0]) separated |= !dimension_graph(w).adjacent(u, v);
      EXPECT_TRUE(separated);
    }
  }
}

TEST(ConstructTest, K44) {
  const std::vector<int> parts{4, 4};
  const Graph g = complete_multipartite(parts);
  PipelineOptions options;
  options.box_mode = BoxMode::kGiven;
  options.box_rep = optimal_box_representation_multipartite(parts);
  options.box_is_optimal = true;
  const auto run = construct_cube_representation(g, options);
  EXPECT_TRUE(run.report.verified);
  EXPECT_EQ(run.report.b_used, 2);
  EXPECT_EQ(run.report.chi_used, 2);
  EXPECT_EQ(run.report.u_dims, 4);
  EXPECT_EQ(run.report.w_dims, 4);
  EXPECT_EQ(run.report.total_dims, 8);
  EXPECT_EQ(run.report.alpha, 4);
  EXPECT_EQ(run.report.theorem_bound, 8);
  EXPECT_TRUE(run.report.exact_parameters);
  EXPECT_EQ(run.cube.dims.size(), 8u);
}

TEST(ConstructTest, CompleteGraphHasNoDimensions) {
  const auto run = construct_cube_representation(complete(7), PipelineOptions{});
  EXPECT_TRUE(run.report.verified);
  EXPECT_EQ(run.report.total_dims, 0);
  EXPECT_TRUE(run.cube.dims.empty());
  EXPECT_EQ(run.cube.n, 7);
}

TEST(ConstructTest, StarWithEightLeaves) {
  const Graph g = star(8);
  PipelineOptions options;
  options.oracle_limit = 9;
  const auto run = construct_cube_representation(g, options);
  EXPECT_TRUE(run.report.verified);
  EXPECT_EQ(run.report.b_used, 1);
  EXPECT_EQ(run.report.class_sizes, (std::vector<int>{1, 8}));
  EXPECT_EQ(run.report.total_dims, 5);
  EXPECT_EQ(run.report.theorem_bound, 8);
  EXPECT_EQ(exact_cubicity(g, 9).cubicity, 3);
}

TEST(ConstructTest, FiveCycleWithOracleBox) {
  const auto run = construct_cube_representation(cycle(5), PipelineOptions{});
  EXPECT_TRUE(run.report.verified);
  EXPECT_EQ(run.report.b_used, 2);
  EXPECT_EQ(run.report.chi_used, 3);
  // 2 * 2 * 2 U dimensions and class sizes {2,2,1} give 1 + 1 gadgets.
  EXPECT_EQ(run.report.total_dims, 10);
}

TEST(ConstructTest, GreedyColoringIsLabelledHeuristic) {
  // A given coloring that is not known to be optimal is reported as such.
  const Graph g = cycle(4);
  PipelineOptions options;
  options.coloring_mode = ColoringMode::kGiven;
  options.coloring = ProperColoring{{0, 1, 2, 1}, 3};
  const auto run = construct_cube_representation(g, options);
  EXPECT_TRUE(run.report.verified);
  EXPECT_FALSE(run.report.exact_parameters);
  EXPECT_EQ(run.report.chi_used, 3);
  EXPECT_EQ(report_to_json(run.report)["parameters"], "heuristic");

  PipelineOptions greedy;
  greedy.coloring_mode = ColoringMode::kGreedy;
  const auto greedy_run = construct_cube_representation(g, greedy);
  EXPECT_TRUE(greedy_run.report.verified);
  EXPECT_FALSE(greedy_run.report.exact_parameters);
}

TEST(ConstructTest, RejectsBadInputs) {
  PipelineOptions bad_coloring;
  bad_coloring.coloring_mode = ColoringMode::kGiven;
  bad_coloring.coloring = ProperColoring{{0, 0, 1, 1}, 2};
  EXPECT_THROW(construct_cube_representation(cycle(4), bad_coloring),
               std::invalid_argument);

  PipelineOptions bad_box;
  bad_box.box_mode = BoxMode::kGiven;
  bad_box.box_rep = k22_box();
  EXPECT_THROW(construct_cube_representation(cycle(4), bad_box), std::invalid_argument);

  EXPECT_THROW(construct_cube_representation(star(8), PipelineOptions{}),
               OracleLimitError);
}

TEST(ConstructTest, ReportJsonFieldOrder) {
  const auto run = construct_cube_representation(cycle(4), PipelineOptions{});
  EXPECT_EQ(report_to_json(run.report).dump(),
            R"({"b_used":2,"chi_used":2,"class_sizes":[2,2],"u_dims":4,"w_dims":2,)"
            R"("total_dims":6,"alpha":2,"theorem_bound":6,"parameters":"exact",)"
            R"("verified":true})");
}

// Per non-edge: same-class pairs are split by a gadget, cross-class pairs by
// a unitized co-bipartized dimension.
void check_routing(const Graph& g, const CubeConstruction& run,
                   const ProperColoring& coloring) {
  const auto& dims = run.cube.dims;
  const auto u_end = static_cast<std::size_t>(run.report.u_dims);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    EXPECT_TRUE(is_supergraph(dimension_graph(dims[k]), g));
  }
  for (const Edge& e : g.non_edges()) {
    if (coloring.colors[e.u] == coloring.colors[e.v]) {
      bool split = false;
      for (std::size_t k = u_end; k < dims.size(); ++k) {
        const Rational gap = dims[k].lefts[e.u] - dims[k].lefts[e.v];
        split |= gap == Rational(2) || gap == Rational(-2);
      }
      EXPECT_TRUE(split);
    } else {
      bool split = false;
      for (std::size_t k = 0; k < u_end; ++k) {
        split |= !dimension_graph(dims[k]).adjacent(e.u, e.v);
      }
      EXPECT_TRUE(split);
    }
  }
}

TEST(ConstructTest, ExhaustiveUpToFiveVertices) {
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      const auto run = construct_cube_representation(g, PipelineOptions{});
      ASSERT_TRUE(run.report.verified);
      const ProperColoring coloring = exact_chromatic_coloring(g);
      int box = exact_boxicity(g).boxicity;
      EXPECT_EQ(run.report.b_used, box);
      std::int64_t w = 0;
      for (int size : run.report.class_sizes) w += ceil_log2(size);
      const int bits = coloring.chi_used <= 1 ? 0 : ceil_log2(coloring.chi_used);
      EXPECT_EQ(run.report.u_dims, 2 * box * bits);
      EXPECT_EQ(run.report.w_dims, w);
      EXPECT_EQ(run.report.total_dims, run.report.u_dims + run.report.w_dims);
      EXPECT_LE(run.report.total_dims, run.report.theorem_bound);
      if (!g.is_complete()) check_routing(g, run, coloring);
    });
  }
}

TEST(ConstructTest, BipartiteSpecialization) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_bipartite(2 + static_cast<int>(rng() % 6), 0.6, rng);
    if (g.is_complete()) continue;
    const auto run = construct_cube_representation(g, PipelineOptions{});
    EXPECT_TRUE(run.report.verified);
    const int alpha = exact_independence_number(g);
    const int box = exact_boxicity(g).boxicity;
    EXPECT_LE(run.report.total_dims, 2 * (box + ceil_log2(alpha)));
  }
}

}  // namespace
}  // namespace boxcub
