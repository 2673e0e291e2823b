#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcub/graph.hpp"
#include "boxcub/interval.hpp"
#include "boxcub/oracle.hpp"
#include "boxcub/recognition.hpp"
#include "boxcub/representation_json.hpp"

namespace boxcub {

struct Bipartition {
  VertexSet a_side;
  VertexSet b_side;
};

// One bipartition per bit of the color codes (ceil(log chi_used) of them):
// bipartition i (0-based here, bit i from the least significant end) puts v
// into A iff bit i of colors[v] is set.
std::vector<Bipartition> binary_bipartitions(const ProperColoring& coloring);

// Adds every pair inside A and every pair inside B; pairs across keep their
// status in g. Throws std::invalid_argument if `p` does not partition V(g).
Graph cobipartite_augment(const Graph& g, const Bipartition& p);

// Two output dimensions per input dimension with span [m, M]:
//   first:  A gets [lo, M+1], B gets [m-1, hi]
//   second: A gets [m-1, hi], B gets [lo, M+1]
// Each side is a clique in both, and a cross pair meets in both exactly when
// it met originally, so the outputs intersect to cobipartite_augment(g, p).
// Throws std::invalid_argument if `rep` does not verify against g or has no
// dimensions.
std::vector<IntervalRepresentation> cobipartize_box_representation(
    const BoxRepresentation& rep, const Graph& g, const Bipartition& p);

class ClawError : public std::invalid_argument {
 public:
  explicit ClawError(const Claw& claw);
  const Claw& claw() const { return claw_; }

 private:
  Claw claw_;
};

// Same dimension graph, every interval of length exactly 1. Throws ClawError
// naming an induced K_{1,3} when the dimension graph has one.
UnitIntervalRepresentation unitize_claw_free_dimension(
    const IntervalRepresentation& rep);

// For each color class C_i (members numbered 0..|C_i|-1 by ascending vertex
// id), ceil(log |C_i|) gadgets. In gadget j every vertex outside C_i sits at
// [1,2]; a member whose number has bit j set sits at [0,1], the rest at
// [2,3]. Indexed [class][j].
std::vector<std::vector<UnitIntervalRepresentation>> color_class_unit_graphs(
    const ProperColoring& coloring);

enum class ColoringMode { kExact, kGreedy, kGiven };
enum class BoxMode { kOracle, kGiven };

struct PipelineOptions {
  ColoringMode coloring_mode = ColoringMode::kExact;
  std::optional<ProperColoring> coloring;
  // Set when a given coloring is known to use chi(G) colors.
  bool coloring_is_optimal = false;

  BoxMode box_mode = BoxMode::kOracle;
  std::optional<BoxRepresentation> box_rep;
  // Set when a given box representation has box(G) dimensions.
  bool box_is_optimal = false;

  // Independence number for the bound; computed exactly when absent.
  std::optional<int> alpha;
  int oracle_limit = kDefaultOracleLimit;
};

struct ConstructionReport {
  int b_used = 0;
  int chi_used = 0;
  std::vector<int> class_sizes;
  std::int64_t u_dims = 0;
  std::int64_t w_dims = 0;
  std::int64_t total_dims = 0;
  int alpha = 0;
  // 2*ceil(log chi_used)*b_used + chi_used*ceil(log alpha).
  std::int64_t theorem_bound = 0;
  // False when chi_used or b_used may exceed chi(G) or box(G).
  bool exact_parameters = true;
  bool verified = false;
  // Populated when verification fails.
  Verdict verdict;
};

struct CubeConstruction {
  CubeRepresentation cube;
  ConstructionReport report;
};

// Output dimensions are all unitized co-bipartized dimensions, bipartition
// by bipartition, followed by the color-class gadgets class by class, gadget
// index ascending. The result is verified against g before returning.
// Throws std::invalid_argument when a given coloring is not proper or a
// given box representation does not verify; OracleLimitError propagates.
CubeConstruction construct_cube_representation(const Graph& g,
                                               const PipelineOptions& options);

Json report_to_json(const ConstructionReport& report);

}  // namespace boxcub
