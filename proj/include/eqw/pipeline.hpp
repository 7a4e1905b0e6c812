#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqw/cover.hpp"
#include "eqw/homoset.hpp"
#include "eqw/model.hpp"

namespace eqw {

enum class InputKind { PointsCsv, MatrixCsv, SeriesCsv };

enum class Algorithm { EqwGreedy, EqwExact, EqwEnum, Hac, Dsatur, ExactColor, Clustergraph };

/// One end-to-end solver invocation. A radius constraint is only valid for
/// the eqw-* algorithms; when `seed` is set, element indices are shuffled
/// before solving and the labels are mapped back afterwards.
struct RunConfig {
  std::string input_path;
  InputKind input_kind = InputKind::PointsCsv;
  WidthConstraint constraint;
  Algorithm algorithm = Algorithm::EqwExact;
  SubObjective subobjective = SubObjective::None;
  double time_limit_s = 600.0;
  std::optional<std::uint64_t> seed;
  std::size_t clique_cap = kDefaultCliqueCap;
  std::size_t enum_limit = kDefaultEnumLimit;
  std::size_t dtw_window = 4;
  std::optional<std::size_t> label_column;
  bool prune_radius_balls = true;
};

struct RunReport {
  RunConfig config;
  std::size_t cluster_count = 0;
  std::vector<std::size_t> labels;
  std::optional<std::vector<std::size_t>> centers;  // radius runs only
  PartitionMetrics metrics;
  bool proven_optimal = false;
  double duration_s = 0.0;
  bool cliques_truncated = false;
  bool enum_complete = true;
};

/// Loads the input, builds the dissimilarity matrix and solves per config.
/// Every report's labels have passed validate_partition; a solver emitting a
/// non-homogeneous partition aborts the run as an internal error.
RunReport run(const RunConfig& config);

/// Same pipeline on an already-built matrix (input fields ignored).
RunReport run_on_matrix(const RunConfig& config, const DissimilarityMatrix& d);

struct BenchEntry {
  std::size_t config_index = 0;
  std::uint64_t seed = 0;
  std::optional<RunReport> report;  // empty when the run errored
  std::string error;
};

struct BenchConfigSummary {
  std::size_t config_index = 0;
  std::size_t runs = 0;
  std::size_t errors = 0;
  std::size_t unproven = 0;
  std::size_t count_min = 0;
  std::size_t count_max = 0;
  double duration_mean_s = 0.0;
  double duration_stddev_s = 0.0;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
  std::vector<BenchConfigSummary> summaries;
};

/// Runs every config with seeds 0..seeds-1 (per-run errors are recorded and
/// the batch continues), reporting min/max cluster counts and mean/stddev
/// durations per config.
BenchReport bench(std::span<const RunConfig> configs, std::size_t seeds);

nlohmann::json report_to_json(const RunReport& report);
nlohmann::json bench_to_json(const BenchReport& report);

/// 0 proven optimal, 2 valid but unproven (greedy/heuristic algorithms,
/// time limit, truncation). Errors exit 1 at the CLI layer.
int exit_code_for(const RunReport& report);
int exit_code_for(const BenchReport& report);

std::string to_string(Algorithm a);
std::string to_string(InputKind k);
std::string to_string(SubObjective s);
std::string to_string(ConstraintKind k);

}  // namespace eqw
