// Command-line front end: summarize, census, generate, calibrate, fit,
// experiment. Exit codes: 0 success, 1 usage, 2 data error, 3 numeric failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "simplicial/census.hpp"
#include "simplicial/error.hpp"
#include "simplicial/fit.hpp"
#include "simplicial/graph.hpp"
#include "simplicial/growth.hpp"
#include "simplicial/pipeline.hpp"
#include "simplicial/text_format.hpp"

namespace {

using namespace simplicial;

constexpr int kUsage = 1;
constexpr int kDataError = 2;
constexpr int kNumericError = 3;

const std::map<std::string, ComplexKind> kKinds{{"s", ComplexKind::S}, {"t", ComplexKind::T}};
const std::map<std::string, ModelKind> kModels{{"s", ModelKind::SModel}, {"emg", ModelKind::Emg}};
const std::map<std::string, LogBase> kBases{{"10", LogBase::Ten}, {"e", LogBase::E}};
const std::map<std::string, ReferenceRule> kRules{{"geomean", ReferenceRule::TailGeometricMean},
                                                  {"mean", ReferenceRule::TailArithmeticMean}};

// Writes to `path`, or stdout when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  fn(out);
}

int cmd_summarize(const std::string& path, const std::string& format) {
  const auto ingested = read_edge_list_file(path);
  const Graph& g = ingested.graph;
  nlohmann::ordered_json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  if (g.empty()) {
    j["avg_cc"] = nullptr;
    j["error"] = "empty graph";
    std::cout << j.dump() << '\n';
    std::cerr << "error: empty graph\n";
    return kDataError;
  }
  const double cc = average_clustering_coefficient(g);
  if (format == "csv") {
    std::cout << "nodes,edges,avg_cc\n" << g.node_count() << ',' << g.edge_count() << ',' << format_real(cc) << '\n';
  } else {
    j["avg_cc"] = cc;
    j["ingest"] = nlohmann::ordered_json::parse(ingest_report_json(ingested.report));
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_census(const std::string& path, ComplexKind kind, const std::string& out, const std::string& units,
               unsigned workers) {
  const auto ingested = read_edge_list_file(path);
  const auto c = census(ingested.graph, kind, workers);
  if (c.empty()) {
    std::cerr << "error: " << (kind == ComplexKind::T ? "no triangles" : "no edges") << '\n';
    return kDataError;
  }
  const auto series = to_distribution(c);
  emit(out, [&](std::ostream& os) { write_distribution_csv(os, series); });
  if (!units.empty()) emit(units, [&](std::ostream& os) { write_unit_factors_csv(os, c); });
  return 0;
}

int cmd_generate(GrowthConfig cfg, const std::string& out) {
  if (cfg.n0 == 0) cfg.n0 = std::max<std::size_t>(cfg.m, 3);
  const Graph g = generate_pa_tf(cfg);
  emit(out, [&](std::ostream& os) { write_edge_list(os, g); });
  return 0;
}

int cmd_calibrate(std::size_t n, std::size_t m, double target, double tolerance, const CalibrationOptions& options,
                  const std::string& out) {
  try {
    const auto result = calibrate_pt(n, m, target, tolerance, options);
    emit(out, [&](std::ostream& os) { os << calibration_json(result) << '\n'; });
    return 0;
  } catch (const CalibrationError& e) {
    nlohmann::ordered_json j;
    j["error"] = e.what();
    j["max_achievable_cc"] = e.max_achievable_cc();
    std::cout << j.dump(2) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  }
}

int cmd_fit(const std::string& path, ModelKind model, const FitOptions& options, const std::string& out,
            const std::string& curve) {
  const auto series = read_distribution_csv_file(path);
  const auto result = fit(model, series, options);
  emit(out, [&](std::ostream& os) { os << fit_result_json(result) << '\n'; });
  if (!curve.empty()) {
    emit(curve, [&](std::ostream& os) {
      write_model_curve_csv(os, result.params, result.log_base, result.support.front(), result.support.back());
    });
  }
  return 0;
}

int cmd_experiment(ExperimentConfig cfg, const std::vector<std::string>& datasets) {
  for (const auto& d : datasets) {
    const auto eq = d.find('=');
    DatasetSpec spec;
    if (eq == std::string::npos) {
      spec.path = d;
      spec.name = spec.path.stem().string();
    } else {
      spec.name = d.substr(0, eq);
      spec.path = d.substr(eq + 1);
    }
    cfg.datasets.push_back(spec);
  }
  const Report report = run_experiment(cfg);
  std::cout << table2_csv(report);
  for (const auto& n : report.networks) {
    for (const auto& f : n.failures) std::cerr << n.name << ": stage " << f.stage << " failed: " << f.message << '\n';
  }
  return report.has_failures() ? kDataError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial-complex adjacency-factor analysis of communication networks"};
  app.require_subcommand(1);

  unsigned workers = 0;
  app.add_option("--workers", workers, "Worker threads (0 = all cores)");

  std::string path;
  std::string out;
  std::string format = "json";
  auto* summarize = app.add_subcommand("summarize", "Nodes, edges and average clustering coefficient of an edge list");
  summarize->add_option("path", path, "Edge-list file")->required();
  summarize->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string kind_name = "s";
  std::string units;
  auto* census_cmd = app.add_subcommand("census", "Adjacency-factor distribution as factor,count,freq CSV");
  census_cmd->add_option("path", path, "Edge-list file")->required();
  census_cmd->add_option("--kind", kind_name, "s (edges) or t (triangles)")->check(CLI::IsMember(kKinds, CLI::ignore_case));
  census_cmd->add_option("--out", out, "Output CSV (default stdout)");
  census_cmd->add_option("--units", units, "Also write per-unit factors here");

  GrowthConfig growth;
  growth.n0 = 0;
  auto* generate = app.add_subcommand("generate", "Grow a network with preferential attachment and triad formation");
  generate->add_option("--n", growth.n, "Final node count")->required();
  generate->add_option("--m", growth.m, "Edges per incoming node")->required();
  generate->add_option("--n0", growth.n0, "Seed ring size (default max(m, 3))");
  generate->add_option("--pt", growth.p_t, "Triad-formation probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", growth.seed, "64-bit RNG seed");
  generate->add_option("--out", out, "Output edge list (default stdout)");

  std::size_t cal_n = 0;
  std::size_t cal_m = 1;
  double target = 0.0;
  double tolerance = 0.01;
  CalibrationOptions cal;
  auto* calibrate = app.add_subcommand("calibrate", "Find p_t matching a target average clustering coefficient");
  calibrate->add_option("--n", cal_n, "Node count")->required();
  calibrate->add_option("--m", cal_m, "Edges per incoming node")->required();
  calibrate->add_option("--target", target, "Target average clustering coefficient")->required();
  calibrate->add_option("--tolerance", tolerance, "Accepted absolute deviation");
  calibrate->add_option("--pilots", cal.pilots, "Pilot networks per probe");
  calibrate->add_option("--max-iterations", cal.max_iterations, "Bisection iteration cap");
  calibrate->add_option("--n0", cal.n0, "Seed ring size (default max(m, 3))");
  calibrate->add_option("--seed", cal.seed, "64-bit RNG seed");
  calibrate->add_option("--out", out, "Output JSON (default stdout)");

  std::string model_name = "s";
  std::string kind_for_fit;
  std::string base_name = "10";
  std::string rule_name = "geomean";
  FitOptions fit_options;
  std::string curve;
  auto* fit_cmd = app.add_subcommand("fit", "Fit the S model or EMG to a factor,count,freq CSV");
  fit_cmd->add_option("path", path, "Distribution CSV")->required();
  auto* model_opt = fit_cmd->add_option("--model", model_name, "s or emg")->check(CLI::IsMember(kModels, CLI::ignore_case));
  fit_cmd->add_option("--kind", kind_for_fit, "s selects the S model, t the EMG")
      ->check(CLI::IsMember(kKinds, CLI::ignore_case))
      ->excludes(model_opt);
  fit_cmd->add_option("--log-base", base_name, "Logarithm base of the S model exponent")
      ->check(CLI::IsMember(kBases, CLI::ignore_case));
  fit_cmd->add_option("--starts", fit_options.starts, "Starts per parameter region (min 16)");
  fit_cmd->add_option("--out", out, "Output JSON (default stdout)");
  fit_cmd->add_option("--curve", curve, "Write x,model CSV here");

  ExperimentConfig exp;
  std::vector<std::string> datasets;
  std::string out_dir = "experiment_out";
  auto* experiment = app.add_subcommand("experiment", "Real-vs-grown comparison over one or more networks");
  experiment->add_option("datasets", datasets, "Edge lists as PATH or NAME=PATH")->required();
  experiment->add_option("--replicas", exp.replicas, "Grown networks per real network")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "Master 64-bit seed");
  experiment->add_option("--tolerance", exp.calibration_tolerance, "Calibration tolerance on average CC");
  experiment->add_option("--pilots", exp.calibration_pilots, "Pilot networks per calibration probe");
  experiment->add_option("--log-base", base_name, "Logarithm base of the S model exponent")
      ->check(CLI::IsMember(kBases, CLI::ignore_case));
  experiment->add_option("--reference-rule", rule_name, "geomean or mean of the tail")
      ->check(CLI::IsMember(kRules, CLI::ignore_case));
  experiment->add_option("--starts", exp.fit_starts, "Fit starts per parameter region (min 16)");
  experiment->add_flag("--no-replica-graphs", [&](std::int64_t) { exp.write_replica_graphs = false; },
                       "Do not write grown edge lists");
  experiment->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*summarize) return cmd_summarize(path, format);
    if (*census_cmd) return cmd_census(path, kKinds.at(CLI::detail::to_lower(kind_name)), out, units, workers);
    if (*generate) return cmd_generate(growth, out);
    if (*calibrate) {
      cal.workers = workers == 0 ? 1 : workers;
      return cmd_calibrate(cal_n, cal_m, target, tolerance, cal, out);
    }
    if (*fit_cmd) {
      fit_options.workers = workers == 0 ? 1 : workers;
      fit_options.log_base = kBases.at(CLI::detail::to_lower(base_name));
      const ModelKind model = kind_for_fit.empty()
                                  ? kModels.at(CLI::detail::to_lower(model_name))
                                  : (CLI::detail::to_lower(kind_for_fit) == "s" ? ModelKind::SModel : ModelKind::Emg);
      return cmd_fit(path, model, fit_options, out, curve);
    }
    if (*experiment) {
      exp.workers = workers;
      exp.output_dir = out_dir;
      exp.log_base = kBases.at(CLI::detail::to_lower(base_name));
      exp.reference_rule = kRules.at(CLI::detail::to_lower(rule_name));
      return cmd_experiment(exp, datasets);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}
