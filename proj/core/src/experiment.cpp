#include "boxcub/experiment.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "boxcub/bounds.hpp"
#include "boxcub/families.hpp"
#include "boxcub/pipeline.hpp"

namespace boxcub {

TightnessReport tightness_experiment(int k, int n) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n % k != 0) {
    throw std::invalid_argument(fmt::format("n={} is not a multiple of k={}", n, k));
  }
  if (n / k < 2) throw std::invalid_argument("parts must have at least 2 vertices");

  const std::vector<int> parts(k, n / k);
  const Graph tk = complete_multipartite(parts);

  PipelineOptions options;
  options.coloring_mode = ColoringMode::kExact;
  options.box_mode = BoxMode::kGiven;
  options.box_rep = optimal_box_representation_multipartite(parts);
  options.box_is_optimal = true;
  // The largest independent set of a complete multipartite graph is a part.
  options.alpha = n / k;
  const CubeConstruction run = construct_cube_representation(tk, options);

  TightnessReport report;
  report.k = k;
  report.n = n;
  report.cub_closed_form = multipartite_ground_truth(parts).cubicity;
  report.pipeline_dims = run.report.total_dims;
  report.theorem_bound = theorem_upper_bound(k, n / k, k);
  report.ratio = static_cast<double>(report.theorem_bound) /
                 static_cast<double>(report.cub_closed_form);
  report.verified = run.report.verified;
  return report;
}

std::string to_csv_row(const TightnessReport& report) {
  return fmt::format("{},{},{},{},{},{:.6f}", report.k, report.n,
                     report.cub_closed_form, report.pipeline_dims,
                     report.theorem_bound, report.ratio);
}

}  // namespace boxcub
