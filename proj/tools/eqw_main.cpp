#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqw/io.hpp"
#include "eqw/pipeline.hpp"

namespace {

using eqw::Algorithm;
using eqw::ConstraintKind;
using eqw::InputKind;
using eqw::SubObjective;

const std::map<std::string, InputKind> kInputKinds{
    {"points-csv", InputKind::PointsCsv},
    {"matrix-csv", InputKind::MatrixCsv},
    {"series-csv", InputKind::SeriesCsv}};

const std::map<std::string, ConstraintKind> kConstraints{
    {"diameter", ConstraintKind::Diameter}, {"radius", ConstraintKind::Radius}};

const std::map<std::string, Algorithm> kAlgorithms{
    {"eqw-greedy", Algorithm::EqwGreedy},   {"eqw-exact", Algorithm::EqwExact},
    {"eqw-enum", Algorithm::EqwEnum},       {"hac", Algorithm::Hac},
    {"dsatur", Algorithm::Dsatur},          {"exact-color", Algorithm::ExactColor},
    {"clustergraph", Algorithm::Clustergraph}};

const std::map<std::string, SubObjective> kSubObjectives{
    {"none", SubObjective::None},
    {"max-width", SubObjective::MaxWidth},
    {"wcsd", SubObjective::Wcsd},
    {"variance", SubObjective::SizeVariance}};

struct CliOptions {
  eqw::RunConfig config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> label_column;
  bool no_prune_balls = false;
  std::string labels_out;
  std::string report_out;
};

void add_config_flags(CLI::App& app, CliOptions& opt, bool input_required) {
  app.add_option("--input", opt.config.input_path, "Input file")->required(input_required);
  app.add_option("--input-kind", opt.config.input_kind, "Input format")
      ->transform(CLI::CheckedTransformer(kInputKinds, CLI::ignore_case))
      ->default_str("points-csv");
  app.add_option("--constraint", opt.config.constraint.kind, "Wideness constraint")
      ->transform(CLI::CheckedTransformer(kConstraints, CLI::ignore_case))
      ->default_str("diameter");
  app.add_option("--threshold", opt.config.constraint.threshold, "Width threshold")
      ->required(input_required);
  app.add_option("--algorithm", opt.config.algorithm, "Solver")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case))
      ->default_str("eqw-exact");
  app.add_option("--subobjective", opt.config.subobjective, "Secondary objective")
      ->transform(CLI::CheckedTransformer(kSubObjectives, CLI::ignore_case))
      ->default_str("none");
  app.add_option("--time-limit-s", opt.config.time_limit_s, "Solver time limit in seconds");
  app.add_option("--seed", opt.seed, "Randomized element ordering seed");
  app.add_option("--clique-cap", opt.config.clique_cap,
                 "Maximal clique enumeration cap (diameter)");
  app.add_option("--enum-limit", opt.config.enum_limit, "Minimum cover enumeration limit");
  app.add_option("--dtw-window", opt.config.dtw_window, "DTW band width for series input");
  app.add_option("--label-col", opt.label_column, "Class label column in points CSV");
  app.add_flag("--no-prune-balls", opt.no_prune_balls,
               "Keep dominated radius balls in the collection");
}

eqw::RunConfig finalize(CliOptions& opt) {
  opt.config.seed = opt.seed;
  opt.config.label_column = opt.label_column;
  opt.config.prune_radius_balls = !opt.no_prune_balls;
  return opt.config;
}

void emit(const nlohmann::json& json, const std::string& path) {
  if (path.empty()) {
    std::cout << json.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << json.dump(2) << "\n";
}

std::vector<eqw::RunConfig> load_configs_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_array()) throw std::runtime_error(path + " must contain a JSON array of configs");

  std::vector<eqw::RunConfig> configs;
  for (const auto& item : doc) {
    eqw::RunConfig c;
    c.input_path = item.at("input").get<std::string>();
    c.input_kind = kInputKinds.at(item.value("input_kind", "points-csv"));
    c.constraint.kind = kConstraints.at(item.value("constraint", "diameter"));
    c.constraint.threshold = item.at("threshold").get<double>();
    c.algorithm = kAlgorithms.at(item.value("algorithm", "eqw-exact"));
    c.subobjective = kSubObjectives.at(item.value("subobjective", "none"));
    c.time_limit_s = item.value("time_limit_s", 600.0);
    c.clique_cap = item.value("clique_cap", eqw::kDefaultCliqueCap);
    c.enum_limit = item.value("enum_limit", eqw::kDefaultEnumLimit);
    c.dtw_window = item.value("dtw_window", std::size_t{4});
    if (item.contains("label_col") && !item["label_col"].is_null())
      c.label_column = item["label_col"].get<std::size_t>();
    c.prune_radius_balls = item.value("prune_radius_balls", true);
    configs.push_back(std::move(c));
  }
  return configs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equiwide clustering: fewest clusters under a width constraint"};
  app.require_subcommand(1);

  CliOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "Solve one instance and emit a JSON report");
  add_config_flags(*run_cmd, run_opt, true);
  run_cmd->add_option("--labels-out", run_opt.labels_out,
                      "Write element-index,cluster-id CSV here");
  run_cmd->add_option("--report-out", run_opt.report_out,
                      "Write the JSON report here (default stdout)");

  CliOptions bench_opt;
  std::size_t bench_seeds = 4;
  std::string bench_configs_path;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run configs across randomized orderings");
  add_config_flags(*bench_cmd, bench_opt, false);
  bench_cmd->add_option("--seeds", bench_seeds, "Number of randomized orderings");
  bench_cmd->add_option("--configs", bench_configs_path,
                        "JSON array of run configs (overrides the flag-built config)");
  bench_cmd->add_option("--report-out", bench_opt.report_out,
                        "Write the JSON report here (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run_cmd)) {
      const eqw::RunReport report = eqw::run(finalize(run_opt));
      if (!run_opt.labels_out.empty()) {
        eqw::Partition p{report.labels, report.cluster_count, report.centers};
        eqw::write_labels_csv(run_opt.labels_out, p);
      }
      emit(eqw::report_to_json(report), run_opt.report_out);
      return eqw::exit_code_for(report);
    }

    std::vector<eqw::RunConfig> configs;
    if (!bench_configs_path.empty()) {
      configs = load_configs_json(bench_configs_path);
    } else {
      if (bench_opt.config.input_path.empty())
        throw std::runtime_error("bench needs --configs or --input/--threshold flags");
      configs.push_back(finalize(bench_opt));
    }
    const eqw::BenchReport report = eqw::bench(configs, bench_seeds);
    emit(eqw::bench_to_json(report), bench_opt.report_out);
    return eqw::exit_code_for(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
