#include "eqw/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "eqw/assign.hpp"
#include "eqw/baselines.hpp"
#include "eqw/dissim.hpp"
#include "eqw/graph.hpp"
#include "eqw/io.hpp"

namespace eqw {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::EqwGreedy: return "eqw-greedy";
    case Algorithm::EqwExact: return "eqw-exact";
    case Algorithm::EqwEnum: return "eqw-enum";
    case Algorithm::Hac: return "hac";
    case Algorithm::Dsatur: return "dsatur";
    case Algorithm::ExactColor: return "exact-color";
    case Algorithm::Clustergraph: return "clustergraph";
  }
  return "?";
}

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::PointsCsv: return "points-csv";
    case InputKind::MatrixCsv: return "matrix-csv";
    case InputKind::SeriesCsv: return "series-csv";
  }
  return "?";
}

std::string to_string(SubObjective s) {
  switch (s) {
    case SubObjective::None: return "none";
    case SubObjective::MaxWidth: return "max-width";
    case SubObjective::Wcsd: return "wcsd";
    case SubObjective::SizeVariance: return "variance";
  }
  return "?";
}

std::string to_string(ConstraintKind k) {
  return k == ConstraintKind::Diameter ? "diameter" : "radius";
}

namespace {

bool is_eqw(Algorithm a) {
  return a == Algorithm::EqwGreedy || a == Algorithm::EqwExact || a == Algorithm::EqwEnum;
}

struct SolveOutcome {
  Partition partition;
  bool proven = false;
  bool cliques_truncated = false;
  bool enum_complete = true;
};

// Truncated clique collections cannot certify optimality and may even miss
// vertices; pad with singletons (always homogeneous) so the greedy cover
// stays feasible, and report the run as unproven.
HomogeneousSetCollection pad_uncovered(HomogeneousSetCollection c) {
  std::vector<bool> covered(c.universe_size, false);
  for (const auto& set : c.sets)
    for (std::size_t e : set.members) covered[e] = true;
  for (std::size_t e = 0; e < c.universe_size; ++e)
    if (!covered[e]) c.sets.push_back({{e}, std::nullopt});
  return c;
}

SolveOutcome solve_eqw(const RunConfig& config, const DissimilarityMatrix& d,
                       Deadline deadline) {
  HomogeneousSetCollection collection;
  if (config.constraint.kind == ConstraintKind::Radius) {
    collection = radius_balls(d, config.constraint.threshold);
    if (config.prune_radius_balls) collection = prune_dominated(collection);
  } else {
    collection = maximal_cliques(build_threshold_graph(d, config.constraint.threshold),
                                 config.clique_cap);
  }

  SolveOutcome outcome;
  outcome.cliques_truncated = collection.truncated;

  Cover cover;
  if (collection.truncated) {
    collection = pad_uncovered(std::move(collection));
    collection.truncated = false;  // greedy on the padded family is safe
    cover = greedy_cover(collection);
  } else if (config.algorithm == Algorithm::EqwGreedy) {
    cover = greedy_cover(collection);
  } else if (config.algorithm == Algorithm::EqwExact) {
    CoverSolution solution = exact_min_cover(collection, deadline);
    cover = std::move(solution.cover);
    outcome.proven = solution.proven;
  } else {
    CoverEnumeration enumeration =
        enumerate_min_covers(collection, config.enum_limit, deadline);
    cover = select_cover(enumeration.covers, d, config.subobjective);
    outcome.proven = enumeration.proven;
    outcome.enum_complete = enumeration.complete;
  }

  const AssignmentStrategy strategy = config.subobjective == SubObjective::SizeVariance
                                          ? AssignmentStrategy::LargestFirst
                                          : AssignmentStrategy::ClosestCenter;
  outcome.partition = assign_unique(cover, d, config.constraint, strategy);
  return outcome;
}

SolveOutcome solve(const RunConfig& config, const DissimilarityMatrix& d) {
  const Deadline deadline = Deadline::after_seconds(config.time_limit_s);
  if (is_eqw(config.algorithm)) return solve_eqw(config, d, deadline);

  SolveOutcome outcome;
  const double threshold = config.constraint.threshold;
  switch (config.algorithm) {
    case Algorithm::Hac:
      outcome.partition = hac_complete_link(d, threshold);
      break;
    case Algorithm::Dsatur: {
      const ComplementGraph gc = complement(build_threshold_graph(d, threshold));
      outcome.partition = coloring_to_partition(dsatur_heuristic(gc));
      break;
    }
    case Algorithm::ExactColor: {
      const ThresholdGraph g = build_threshold_graph(d, threshold);
      const auto clique = greedy_independent_set(g, fpf_order(d));
      const ColoringResult result = exact_coloring(complement(g), deadline, clique);
      outcome.partition = coloring_to_partition(result.coloring);
      outcome.proven = result.proven;
      break;
    }
    case Algorithm::Clustergraph: {
      const ClustergraphResult result = clustergraph(d, threshold, deadline);
      outcome.partition = result.partition;
      outcome.proven = result.proven;
      break;
    }
    default:
      throw std::invalid_argument("unhandled algorithm");
  }
  return outcome;
}

DissimilarityMatrix permuted(const DissimilarityMatrix& d,
                             std::span<const std::size_t> perm) {
  DissimilarityMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) out.set(i, j, d(perm[i], perm[j]));
  return out;
}

}  // namespace

RunReport run_on_matrix(const RunConfig& config, const DissimilarityMatrix& d) {
  if (config.constraint.kind == ConstraintKind::Radius && !is_eqw(config.algorithm))
    throw std::invalid_argument("a radius constraint is only supported by the eqw-* algorithms");
  if (config.constraint.threshold < 0.0)
    throw std::invalid_argument("threshold must be nonnegative");

  const auto start = std::chrono::steady_clock::now();

  SolveOutcome outcome;
  if (config.seed) {
    std::vector<std::size_t> perm(d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(*config.seed);
    std::shuffle(perm.begin(), perm.end(), rng);

    outcome = solve(config, permuted(d, perm));

    Partition mapped;
    mapped.k = outcome.partition.k;
    mapped.labels.assign(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
      mapped.labels[perm[i]] = outcome.partition.labels[i];
    if (outcome.partition.centers) {
      std::vector<std::size_t> centers(outcome.partition.k);
      for (std::size_t c = 0; c < outcome.partition.k; ++c)
        centers[c] = perm[(*outcome.partition.centers)[c]];
      mapped.centers = std::move(centers);
    }
    outcome.partition = relabel_compact(mapped);
  } else {
    outcome = solve(config, d);
  }

  RunReport report;
  report.config = config;
  try {
    report.metrics = validate_partition(outcome.partition, d, config.constraint);
  } catch (const ValidationError& e) {
    // Solvers are required to emit homogeneous partitions; reaching this
    // point is a bug, not an input problem.
    throw std::logic_error(std::string("internal error: solver emitted an invalid partition: ") +
                           e.what());
  }
  report.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.cluster_count = outcome.partition.k;
  report.labels = std::move(outcome.partition.labels);
  report.centers = std::move(outcome.partition.centers);
  report.proven_optimal = outcome.proven;
  report.cliques_truncated = outcome.cliques_truncated;
  report.enum_complete = outcome.enum_complete;
  return report;
}

namespace {

DissimilarityMatrix load_matrix(const RunConfig& config) {
  switch (config.input_kind) {
    case InputKind::PointsCsv:
      return euclidean_matrix(load_points_csv(config.input_path, config.label_column));
    case InputKind::MatrixCsv:
      return load_matrix_csv(config.input_path);
    case InputKind::SeriesCsv:
      return dtw_matrix(load_series_csv(config.input_path, config.dtw_window));
  }
  throw std::invalid_argument("unhandled input kind");
}

}  // namespace

RunReport run(const RunConfig& config) { return run_on_matrix(config, load_matrix(config)); }

BenchReport bench(std::span<const RunConfig> configs, std::size_t seeds) {
  BenchReport report;
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    BenchConfigSummary summary;
    summary.config_index = ci;

    std::optional<DissimilarityMatrix> matrix;
    std::string load_error;
    try {
      matrix = load_matrix(configs[ci]);
    } catch (const std::exception& e) {
      load_error = e.what();
    }

    std::vector<double> durations;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
      BenchEntry entry;
      entry.config_index = ci;
      entry.seed = seed;
      if (!matrix) {
        entry.error = load_error;
      } else {
        RunConfig run_config = configs[ci];
        run_config.seed = seed;
        try {
          entry.report = run_on_matrix(run_config, *matrix);
        } catch (const std::exception& e) {
          entry.error = e.what();
        }
      }

      if (entry.report) {
        const RunReport& r = *entry.report;
        if (summary.runs == 0) {
          summary.count_min = summary.count_max = r.cluster_count;
        } else {
          summary.count_min = std::min(summary.count_min, r.cluster_count);
          summary.count_max = std::max(summary.count_max, r.cluster_count);
        }
        ++summary.runs;
        if (!r.proven_optimal) ++summary.unproven;
        durations.push_back(r.duration_s);
      } else {
        ++summary.errors;
      }
      report.entries.push_back(std::move(entry));
    }

    if (!durations.empty()) {
      const double mean =
          std::accumulate(durations.begin(), durations.end(), 0.0) / durations.size();
      double var = 0.0;
      for (double t : durations) var += (t - mean) * (t - mean);
      summary.duration_mean_s = mean;
      summary.duration_stddev_s = std::sqrt(var / durations.size());
    }
    report.summaries.push_back(summary);
  }
  return report;
}

namespace {

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j{{"input", c.input_path},
                   {"input_kind", to_string(c.input_kind)},
                   {"constraint", to_string(c.constraint.kind)},
                   {"threshold", c.constraint.threshold},
                   {"algorithm", to_string(c.algorithm)},
                   {"subobjective", to_string(c.subobjective)},
                   {"time_limit_s", c.time_limit_s},
                   {"clique_cap", c.clique_cap},
                   {"enum_limit", c.enum_limit},
                   {"dtw_window", c.dtw_window},
                   {"prune_radius_balls", c.prune_radius_balls}};
  j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json();
  j["label_col"] = c.label_column ? nlohmann::json(*c.label_column) : nlohmann::json();
  return j;
}

}  // namespace

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["config"] = config_to_json(report.config);
  j["clusters"] = report.cluster_count;
  j["labels"] = report.labels;
  j["centers"] = report.centers ? nlohmann::json(*report.centers) : nlohmann::json();
  j["metrics"] = {{"max_width", report.metrics.max_width},
                  {"wcsd", report.metrics.wcsd},
                  {"wcsd_pair_convention", "unordered"},
                  {"size_variance_objective", report.metrics.size_variance_objective},
                  {"per_cluster_width", report.metrics.per_cluster_width}};
  j["proven_optimal"] = report.proven_optimal;
  j["duration_s"] = report.duration_s;
  j["cliques_truncated"] = report.cliques_truncated;
  j["enum_complete"] = report.enum_complete;
  return j;
}

nlohmann::json bench_to_json(const BenchReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& entry : report.entries) {
    nlohmann::json e{{"config_index", entry.config_index}, {"seed", entry.seed}};
    if (entry.report)
      e["report"] = report_to_json(*entry.report);
    else
      e["error"] = entry.error;
    entries.push_back(std::move(e));
  }
  nlohmann::json summaries = nlohmann::json::array();
  for (const auto& s : report.summaries)
    summaries.push_back({{"config_index", s.config_index},
                         {"runs", s.runs},
                         {"errors", s.errors},
                         {"unproven", s.unproven},
                         {"count_min", s.count_min},
                         {"count_max", s.count_max},
                         {"duration_mean_s", s.duration_mean_s},
                         {"duration_stddev_s", s.duration_stddev_s}});
  return nlohmann::json{{"entries", entries}, {"summaries", summaries}};
}

int exit_code_for(const RunReport& report) { return report.proven_optimal ? 0 : 2; }

int exit_code_for(const BenchReport& report) {
  for (const auto& s : report.summaries)
    if (s.errors > 0 || s.unproven > 0) return 2;
  return 0;
}

}  // namespace eqw
