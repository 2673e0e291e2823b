#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxcub/graph_io.hpp"

namespace boxcub::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

struct GraphInput {
  // File path, or "-" for stdin.
  std::string path;
  GraphFormat format = GraphFormat::kEdgeList;
};

struct AnalyzeOptions {
  GraphInput input;
  int oracle_limit = 7;
  // Run the exact oracles up to the hard limit regardless of oracle_limit.
  bool force = false;
};

struct ConstructOptions {
  GraphInput input;
  std::string coloring = "exact";
  // "oracle" or a path to a box/interval representation JSON file.
  std::string boxrep = "oracle";
  int oracle_limit = 7;
  bool force = false;
  // Empty means stdout.
  std::string out;
};

struct VerifyOptions {
  std::string rep_path;
  GraphInput input;
};

struct BenchOptions {
  std::string family;
  std::optional<int> k;
  std::vector<int> n;
  std::optional<int> count;
  std::optional<std::uint64_t> seed;
  double p = 0.5;
  int oracle_limit = 7;
};

struct GenerateOptions {
  std::string family;
  std::optional<int> n;
  std::vector<int> parts;
  double p = 0.5;
  std::uint64_t seed = 0;
  GraphFormat format = GraphFormat::kEdgeList;
};

int run_analyze(const AnalyzeOptions& options);
int run_construct(const ConstructOptions& options);
int run_verify(const VerifyOptions& options);
int run_bench(const BenchOptions& options);
int run_generate(const GenerateOptions& options);

}  // namespace boxcub::cli
