#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace boxcub {

// One point of the tightness sweep over T_k, the complete k-partite graph
// with n/k vertices per part.
struct TightnessReport {
  int k = 0;
  int n = 0;
  // k * ceil(log(n/k)).
  std::int64_t cub_closed_form = 0;
  // Dimensions produced by the pipeline (optimal box representation, exact
  // coloring), verified against T_k.
  std::int64_t pipeline_dims = 0;
  std::int64_t theorem_bound = 0;
  double ratio = 0.0;
  bool verified = false;
};

// Throws std::invalid_argument unless k >= 2, n is a multiple of k, and
// n/k >= 2.
TightnessReport tightness_experiment(int k, int n);

inline constexpr std::string_view kExperimentCsvHeader =
    "k,n,cub_closed_form,pipeline_dims,theorem_bound,ratio";

// Ratio printed with six decimals.
std::string to_csv_row(const TightnessReport& report);

}  // namespace boxcub
