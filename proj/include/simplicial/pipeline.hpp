#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "simplicial/census.hpp"
#include "simplicial/fit.hpp"
#include "simplicial/graph.hpp"
#include "simplicial/growth.hpp"
#include "simplicial/stats.hpp"

namespace simplicial {

struct DatasetSpec {
  std::string name;
  std::filesystem::path path;
};

struct ExperimentConfig {
  std::vector<DatasetSpec> datasets;
  std::size_t replicas = 10;
  std::uint64_t seed = 0;
  double calibration_tolerance = 0.01;
  std::size_t calibration_pilots = 5;
  unsigned calibration_max_iterations = 20;
  LogBase log_base = LogBase::Ten;
  ReferenceRule reference_rule = ReferenceRule::TailGeometricMean;
  std::size_t fit_starts = 16;
  std::filesystem::path output_dir;
  unsigned workers = 0;  ///< 0 = hardware concurrency
  bool write_replica_graphs = true;

  /// Throws ConfigError on zero replicas, no datasets or an unreadable path.
  void validate() const;
};

/// Table 1 row.
struct NetworkSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_cc = 0.0;
};

NetworkSummary summarize(const Graph& g);

struct StageFailure {
  std::string stage;
  std::string message;
};

/// One fitted model (S model on S-complex factors, EMG on T-complex factors)
/// for one network: the real fit, every replica fit, and the comparison.
struct ModelComparison {
  ModelKind model = ModelKind::SModel;
  ComplexKind complex = ComplexKind::S;
  std::optional<FitResult> real;
  std::optional<ReferenceBaseline> reference;
  std::vector<std::optional<FitResult>> replicas;
  /// Means over successful replicas; empty when none succeeded.
  std::optional<std::array<double, 3>> grown_mean_params;
  std::optional<double> grown_mean_mnd;
  /// One-sample t-test per parameter (replica estimates vs real estimate).
  std::optional<std::array<TTestResult, 3>> ttests;
};

struct NetworkReport {
  std::string name;
  std::string source;  ///< file name of the input, without directories
  IngestReport ingest;
  std::optional<NetworkSummary> summary;
  std::optional<GrowthConfig> growth;
  std::optional<CalibrationResult> calibration;
  std::vector<std::uint64_t> replica_seeds;
  std::vector<ModelComparison> models;
  std::vector<StageFailure> failures;
};

struct Report {
  ExperimentConfig config;
  std::vector<NetworkReport> networks;

  bool has_failures() const;
};

/// Runs the full comparison for every dataset: ingest, S/T census, fits,
/// reference baselines, P_t calibration, replica growth and fits, t-tests.
/// Stage failures are recorded and the run continues with the next stage or
/// network. Writes report.json, table1.csv, table2.csv and per-network
/// artifacts under config.output_dir. Deterministic given config.seed.
Report run_experiment(const ExperimentConfig& config);

/// Same procedure on an in-memory graph; nothing is written to disk.
NetworkReport analyze_network(const std::string& name, const Graph& real, const ExperimentConfig& config,
                              std::uint64_t network_seed, const std::filesystem::path& artifact_dir = {});

std::string report_json(const Report& report);
std::string table1_csv(const Report& report);
/// Table 2 layout: real / grown-mean per parameter, "MND / MND' / ref" per
/// model. A trailing '*' marks a grown mean significantly different from the
/// real value at the 99% level.
std::string table2_csv(const Report& report);

}  // namespace simplicial
