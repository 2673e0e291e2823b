#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "boxcub/bounds.hpp"
#include "boxcub/experiment.hpp"
#include "boxcub/families.hpp"
#include "boxcub/graph_invariants.hpp"
#include "boxcub/oracle.hpp"
#include "boxcub/pipeline.hpp"
#include "boxcub/recognition.hpp"
#include "boxcub/representation_json.hpp"

namespace boxcub::cli {
namespace {

// Bad user input; reported on stderr with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph read_graph(const GraphInput& input) {
  const std::string text = read_text(input.path);
  try {
    return parse_graph(text, input.format);
  } catch (const ParseError& e) {
    throw InputError(input.path + ": " + e.what());
  }
}

AnyRepresentation read_representation(const std::string& path) {
  const std::string text = read_text(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return representation_from_json(j);
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back(Json::array({e.u, e.v}));
  return a;
}

int effective_limit(int oracle_limit, bool force) {
  return force ? kOracleHardLimit : std::min(oracle_limit, kOracleHardLimit);
}

// Largest s such that K_{1,s} is an induced subgraph, i.e. the largest
// independence number of an open neighborhood.
int max_induced_star_leaves(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const std::vector<int> nb = g.neighbor_list(v);
    if (static_cast<int>(nb.size()) <= best) continue;
    best = std::max(best, exact_independence_number(g.induced(nb)));
  }
  return best;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const OracleLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace

int run_analyze(const AnalyzeOptions& options) {
  return guarded([&] {
    const Graph g = read_graph(options.input);
    const int n = g.num_vertices();
    if (n == 0) throw InputError("graph has no vertices");
    const int limit = effective_limit(options.oracle_limit, options.force);

    const int alpha = exact_independence_number(g);
    const int chi = exact_chromatic_coloring(g).chi_used;
    const DiameterInfo diam = diameter(g);

    Json sources = Json::object();
    Json omitted = Json::object();
    std::optional<int> box;
    std::optional<int> cub;
    const std::string refusal =
        fmt::format("n={} exceeds oracle limit {}", n, limit);
    if (g.is_complete()) {
      box = 0;
      cub = 0;
      sources["box"] = "complete";
      sources["cub"] = "complete";
    } else {
      if (find_interval_representation(g)) {
        box = 1;
        sources["box"] = "interval recognizer";
      } else if (n <= limit) {
        box = exact_boxicity(g, limit).boxicity;
        sources["box"] = "oracle";
      } else {
        omitted["box"] = refusal;
      }
      if (find_unit_interval_representation(g)) {
        cub = 1;
        sources["cub"] = "unit interval recognizer";
      } else if (n <= limit) {
        cub = exact_cubicity(g, limit).cubicity;
        sources["cub"] = "oracle";
      } else {
        omitted["cub"] = refusal;
      }
    }

    const int volume = volume_lower_bound(g);
    const int star_leaves = max_induced_star_leaves(g);

    Json out;
    out["n"] = n;
    out["m"] = g.num_edges();
    out["alpha"] = alpha;
    out["chi"] = chi;
    out["diameter"] = diam.diameter;
    out["connected"] = diam.connected;
    if (box) out["box"] = *box;
    if (cub) out["cub"] = *cub;
    out["volume_lb"] = volume;
    if (box) {
      out["theorem_bound"] = theorem_upper_bound(chi, alpha, *box);
      out["adiga_bound"] = adiga_upper_bound(alpha, *box);
      out["max_box_volume"] = std::max(*box, volume);
    }
    out["max_star_leaves"] = star_leaves;
    out["star_lb"] = star_leaves > 0 ? ceil_log2(star_leaves) : 0;
    out["sources"] = sources;
    if (!omitted.empty()) out["omitted"] = omitted;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  });
}

int run_construct(const ConstructOptions& options) {
  return guarded([&] {
    const Graph g = read_graph(options.input);
    PipelineOptions pipeline;
    if (options.coloring == "exact") {
      pipeline.coloring_mode = ColoringMode::kExact;
    } else if (options.coloring == "greedy") {
      pipeline.coloring_mode = ColoringMode::kGreedy;
    } else {
      throw InputError("--coloring must be exact or greedy");
    }
    pipeline.oracle_limit = effective_limit(options.oracle_limit, options.force);
    if (options.boxrep == "oracle") {
      pipeline.box_mode = BoxMode::kOracle;
    } else {
      pipeline.box_mode = BoxMode::kGiven;
      BoxRepresentation rep = as_box_representation(read_representation(options.boxrep));
      if (rep.n != g.num_vertices()) {
        throw InputError(fmt::format("box representation has n={}, graph has n={}",
                                     rep.n, g.num_vertices()));
      }
      pipeline.box_rep = std::move(rep);
    }

    const CubeConstruction run = construct_cube_representation(g, pipeline);
    Json out;
    out["representation"] = to_json(run.cube);
    out["report"] = report_to_json(run.report);
    const std::string text = out.dump(2) + "\n";
    if (options.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(options.out, std::ios::binary);
      if (!file) throw InputError("cannot write " + options.out);
      file << text;
    }
    if (!run.report.verified) {
      std::cerr << "verification failed\nmissing edges: "
                << edges_json(run.report.verdict.missing_edges).dump()
                << "\nextra edges: "
                << edges_json(run.report.verdict.extra_edges).dump() << '\n';
      return kExitMismatch;
    }
    return kExitOk;
  });
}

int run_verify(const VerifyOptions& options) {
  return guarded([&] {
    const BoxRepresentation rep = as_box_representation(read_representation(options.rep_path));
    const Graph g = read_graph(options.input);
    if (rep.n != g.num_vertices()) {
      throw InputError(fmt::format("representation has n={}, graph has n={}", rep.n,
                                   g.num_vertices()));
    }
    const Verdict verdict = verify_representation(rep, g);
    Json out;
    out["equal"] = verdict.equal();
    out["missing_edges"] = edges_json(verdict.missing_edges);
    out["extra_edges"] = edges_json(verdict.extra_edges);
    std::cout << out.dump() << '\n';
    return verdict.equal() ? kExitOk : kExitMismatch;
  });
}

int run_bench(const BenchOptions& options) {
  return guarded([&] {
    if (options.family == "tk") {
      if (!options.k || options.n.empty()) throw InputError("tk needs --k and --n");
      const int k = *options.k;
      for (int n : options.n) {
        if (k < 2 || n % k != 0 || n / k < 2) {
          throw InputError(fmt::format(
              "invalid point k={} n={}: need k >= 2 and n a multiple of k with n/k >= 2",
              k, n));
        }
      }
      std::cout << kExperimentCsvHeader << '\n';
      for (int n : options.n) {
        std::cout << to_csv_row(tightness_experiment(k, n)) << '\n';
      }
      return kExitOk;
    }
    if (options.family == "random") {
      if (options.n.size() != 1 || !options.count || !options.seed) {
        throw InputError("random needs one --n, --count and --seed");
      }
      const int n = options.n.front();
      const int limit = effective_limit(options.oracle_limit, false);
      if (n < 1 || n > limit) {
        throw InputError(fmt::format("--n must be in 1..{}", limit));
      }
      if (*options.count < 1) throw InputError("--count must be positive");
      if (!(options.p >= 0.0 && options.p <= 1.0)) {
        throw InputError("--p must be in [0, 1]");
      }
      std::cout << fmt::format("# family=random n={} count={} seed={} p={}\n", n,
                               *options.count, *options.seed, options.p);
      std::cout << kExperimentCsvHeader << '\n';
      std::mt19937_64 rng(*options.seed);
      PipelineOptions pipeline;
      pipeline.oracle_limit = limit;
      for (int i = 0; i < *options.count; ++i) {
        const Graph g = random_graph(n, options.p, rng);
        const CubeConstruction run = construct_cube_representation(g, pipeline);
        TightnessReport row;
        row.k = std::max(run.report.chi_used, 1);
        row.n = n;
        row.cub_closed_form = exact_cubicity(g, limit).cubicity;
        row.pipeline_dims = run.report.total_dims;
        row.theorem_bound = run.report.theorem_bound;
        // Only complete graphs have cubicity 0, and their bound is 0 too.
        row.ratio = row.cub_closed_form == 0
                        ? 1.0
                        : static_cast<double>(row.theorem_bound) /
                              static_cast<double>(row.cub_closed_form);
        std::cout << to_csv_row(row) << '\n';
      }
      return kExitOk;
    }
    throw InputError("--family must be tk or random");
  });
}

int run_generate(const GenerateOptions& options) {
  return guarded([&] {
    auto need_n = [&] {
      if (!options.n) throw InputError("--n is required for " + options.family);
      return *options.n;
    };
    Graph g;
    if (options.family == "star") {
      g = make_family(StarFamily{need_n()});
    } else if (options.family == "multipartite") {
      g = make_family(MultipartiteFamily{options.parts});
    } else if (options.family == "glue") {
      g = make_family(PathStarGlueFamily{need_n()});
    } else if (options.family == "complete") {
      g = make_family(CompleteFamily{need_n()});
    } else if (options.family == "edgeless") {
      g = make_family(EdgelessFamily{need_n()});
    } else if (options.family == "random") {
      std::mt19937_64 rng(options.seed);
      const int n = need_n();
      if (n < 0) throw InputError("--n must be non-negative");
      g = random_graph(n, options.p, rng);
    } else {
      throw InputError("unknown family " + options.family);
    }
    std::cout << serialize_graph(g, options.format);
    if (options.format == GraphFormat::kGraph6) std::cout << '\n';
    return kExitOk;
  });
}

}  // namespace boxcub::cli
