#include "simplicial/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "simplicial/error.hpp"
#include "simplicial/random.hpp"

namespace simplicial {

namespace {

using Json = nlohmann::ordered_json;

unsigned resolve_workers(unsigned requested) {
  return requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
}

template <class Fn>
void run_indexed(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers && w < count; ++w) {
    pool.emplace_back([w, workers, count, &fn] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
}

std::string replica_tag(std::size_t r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "replica_%02zu", r + 1);
  return buf;
}

struct ModelPlan {
  ModelKind model;
  ComplexKind complex;
};

constexpr ModelPlan kPlans[2] = {{ModelKind::SModel, ComplexKind::S}, {ModelKind::Emg, ComplexKind::T}};

// The S model cannot be evaluated at factor 0, so its baseline is scored
// over the same support as the model.
std::uint32_t baseline_min_factor(ModelKind model) { return model == ModelKind::SModel ? 1 : 0; }

struct SeriesPair {
  std::optional<DistributionSeries> s;
  std::optional<DistributionSeries> t;
  const std::optional<DistributionSeries>& operator[](ComplexKind k) const { return k == ComplexKind::S ? s : t; }
};

// Census both kinds; failures recorded under `prefix`.
SeriesPair measure(const Graph& g, unsigned workers, const std::string& prefix, std::vector<StageFailure>& failures,
                   const std::filesystem::path& artifact_dir, const std::string& artifact_prefix) {
  SeriesPair out;
  for (ComplexKind kind : {ComplexKind::S, ComplexKind::T}) {
    const std::string stage = prefix + "census_" + std::string(to_string(kind));
    try {
      const auto c = census(g, kind, workers);
      if (c.empty()) throw DomainError(kind == ComplexKind::T ? "no triangles" : "no edges");
      auto series = to_distribution(c);
      if (!artifact_dir.empty()) {
        write_distribution_csv_file(artifact_dir / (artifact_prefix + "_" + std::string(to_string(kind)) + "_distribution.csv"),
                                    series);
      }
      (kind == ComplexKind::S ? out.s : out.t) = std::move(series);
    } catch (const std::exception& e) {
      failures.push_back({stage, e.what()});
    }
  }
  return out;
}

std::optional<FitResult> fit_and_persist(ModelKind model, const DistributionSeries& series, const FitOptions& options,
                                         const std::string& stage, std::vector<StageFailure>& failures,
                                         const std::filesystem::path& artifact_dir, const std::string& artifact_prefix) {
  try {
    auto result = fit(model, series, options);
    if (!artifact_dir.empty()) {
      const std::string base = artifact_prefix + "_" + std::string(to_string(model));
      write_text(artifact_dir / (base + "_fit.json"), fit_result_json(result) + "\n");
      std::ofstream curve(artifact_dir / (base + "_curve.csv"));
      write_model_curve_csv(curve, result.params, result.log_base, result.support.front(), result.support.back());
    }
    return result;
  } catch (const std::exception& e) {
    failures.push_back({stage, e.what()});
    return std::nullopt;
  }
}

Json real_or_string(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json params_json(const ModelParams& p) {
  Json j;
  const auto names = p.names();
  for (std::size_t i = 0; i < 3; ++i) j[std::string(names[i])] = real_or_string(p.values[i]);
  return j;
}

Json fit_json(const FitResult& f) {
  Json j;
  j["params"] = params_json(f.params);
  j["sse"] = real_or_string(f.sse);
  j["mnd"] = real_or_string(f.mnd);
  j["support_min"] = f.support.front();
  j["support_max"] = f.support.back();
  j["support_points"] = f.support.size();
  j["converged"] = f.converged;
  j["restarts"] = f.restarts;
  return j;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (replicas < 1) throw ConfigError("replicas must be at least 1");
  if (datasets.empty()) throw ConfigError("no datasets given");
  if (!(calibration_tolerance > 0.0)) throw ConfigError("calibration tolerance must be positive");
  for (const auto& d : datasets) {
    std::ifstream probe(d.path);
    if (!probe) throw ConfigError("cannot read dataset '" + d.path.string() + "'");
  }
}

bool Report::has_failures() const {
  for (const auto& n : networks) {
    if (!n.failures.empty()) return true;
  }
  return false;
}

NetworkSummary summarize(const Graph& g) { return {g.node_count(), g.edge_count(), average_clustering_coefficient(g)}; }

NetworkReport analyze_network(const std::string& name, const Graph& real, const ExperimentConfig& config,
                              std::uint64_t network_seed, const std::filesystem::path& artifact_dir) {
  const unsigned workers = resolve_workers(config.workers);
  NetworkReport rep;
  rep.name = name;
  rep.ingest.nodes = real.node_count();
  rep.ingest.edges = real.edge_count();

  try {
    rep.summary = summarize(real);
  } catch (const std::exception& e) {
    rep.failures.push_back({"summary", e.what()});
    return rep;
  }

  FitOptions fit_options;
  fit_options.log_base = config.log_base;
  fit_options.starts = config.fit_starts;
  fit_options.workers = workers;

  const SeriesPair real_series = measure(real, workers, "", rep.failures, artifact_dir, "real");
  for (const auto& plan : kPlans) {
    ModelComparison mc;
    mc.model = plan.model;
    mc.complex = plan.complex;
    if (const auto& series = real_series[plan.complex]) {
      mc.real = fit_and_persist(plan.model, *series, fit_options, "fit_real_" + std::string(to_string(plan.model)),
                                rep.failures, artifact_dir, "real");
      try {
        mc.reference = reference_constant(*series, config.reference_rule, baseline_min_factor(plan.model));
      } catch (const std::exception& e) {
        rep.failures.push_back({"reference_" + std::string(to_string(plan.model)), e.what()});
      }
    }
    mc.replicas.resize(config.replicas);
    rep.models.push_back(std::move(mc));
  }

  GrowthConfig growth = derive_growth_config({rep.summary->nodes, rep.summary->edges, rep.summary->avg_cc});
  try {
    CalibrationOptions cal;
    cal.n0 = growth.n0;
    cal.pilots = config.calibration_pilots;
    cal.max_iterations = config.calibration_max_iterations;
    cal.seed = split_seed(network_seed, 0);
    cal.workers = workers;
    rep.calibration = calibrate_pt(growth.n, growth.m, rep.summary->avg_cc, config.calibration_tolerance, cal);
    growth.p_t = rep.calibration->p_t;
    rep.growth = growth;
  } catch (const std::exception& e) {
    rep.failures.push_back({"calibrate", e.what()});
    return rep;
  }

  for (std::size_t r = 0; r < config.replicas; ++r) rep.replica_seeds.push_back(split_seed(network_seed, r + 1));

  // Each replica owns its failure list; merged in replica order afterwards.
  std::vector<std::vector<StageFailure>> replica_failures(config.replicas);
  FitOptions replica_fit = fit_options;
  replica_fit.workers = 1;
  run_indexed(config.replicas, workers, [&](std::size_t r) {
    const std::string tag = replica_tag(r);
    auto& failures = replica_failures[r];
    GrowthConfig cfg = growth;
    cfg.seed = rep.replica_seeds[r];
    Graph grown;
    try {
      grown = generate_pa_tf(cfg);
      if (!artifact_dir.empty() && config.write_replica_graphs) write_edge_list_file(artifact_dir / (tag + ".edges"), grown);
    } catch (const std::exception& e) {
      failures.push_back({tag + "_generate", e.what()});
      return;
    }
    const SeriesPair series = measure(grown, 1, tag + "_", failures, artifact_dir, tag);
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& plan = kPlans[k];
      if (const auto& s = series[plan.complex]) {
        rep.models[k].replicas[r] = fit_and_persist(plan.model, *s, replica_fit,
                                                    tag + "_fit_" + std::string(to_string(plan.model)), failures,
                                                    artifact_dir, tag);
      }
    }
  });
  for (auto& f : replica_failures) rep.failures.insert(rep.failures.end(), f.begin(), f.end());

  for (auto& mc : rep.models) {
    std::array<std::vector<double>, 3> samples;
    std::vector<double> mnds;
    for (const auto& f : mc.replicas) {
      if (!f) continue;
      for (std::size_t i = 0; i < 3; ++i) samples[i].push_back(f->params.values[i]);
      mnds.push_back(f->mnd);
    }
    if (mnds.empty()) continue;
    std::array<double, 3> mean{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (double v : samples[i]) mean[i] += v;
      mean[i] /= static_cast<double>(samples[i].size());
    }
    mc.grown_mean_params = mean;
    double mnd_sum = 0.0;
    for (double v : mnds) mnd_sum += v;
    mc.grown_mean_mnd = mnd_sum / static_cast<double>(mnds.size());

    // a single replica has no sample variance to test against
    if (!mc.real || mnds.size() < 2) continue;
    const std::string stage = "ttest_" + std::string(to_string(mc.model));
    try {
      std::array<TTestResult, 3> tests;
      for (std::size_t i = 0; i < 3; ++i) tests[i] = one_sample_t_test(samples[i], mc.real->params.values[i]);
      mc.ttests = tests;
    } catch (const std::exception& e) {
      rep.failures.push_back({stage, e.what()});
    }
  }
  return rep;
}

Report run_experiment(const ExperimentConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  std::filesystem::create_directories(config.output_dir);

  for (std::size_t i = 0; i < config.datasets.size(); ++i) {
    const auto& ds = config.datasets[i];
    const auto dir = config.output_dir / ds.name;
    std::filesystem::create_directories(dir);
    const std::uint64_t network_seed = split_seed(config.seed, i);
    NetworkReport rep;
    try {
      auto ingested = read_edge_list_file(ds.path);
      write_text(dir / "ingest.json", ingest_report_json(ingested.report) + "\n");
      rep = analyze_network(ds.name, ingested.graph, config, network_seed, dir);
      rep.ingest = ingested.report;
    } catch (const std::exception& e) {
      rep.name = ds.name;
      rep.failures.push_back({"ingest", e.what()});
    }
    rep.source = ds.path.filename().string();
    report.networks.push_back(std::move(rep));
  }

  write_text(config.output_dir / "report.json", report_json(report));
  write_text(config.output_dir / "table1.csv", table1_csv(report));
  write_text(config.output_dir / "table2.csv", table2_csv(report));
  return report;
}

std::string report_json(const Report& report) {
  const auto& cfg = report.config;
  Json root;
  Json meta;
  meta["replicas"] = cfg.replicas;
  meta["seed"] = cfg.seed;
  meta["calibration_tolerance"] = cfg.calibration_tolerance;
  meta["calibration_pilots"] = cfg.calibration_pilots;
  meta["calibration_max_iterations"] = cfg.calibration_max_iterations;
  meta["s_model_log_base"] = std::string(to_string(cfg.log_base));
  meta["reference_rule"] = std::string(to_string(cfg.reference_rule));
  meta["fit_objective"] = "least_squares_on_normalized_frequency";
  meta["fit_starts_per_region"] = std::max<std::size_t>(cfg.fit_starts, 16);
  meta["growth_seed_topology"] = "ring of n0 = max(m, 3) nodes";
  meta["growth_m_rule"] = "max(1, round(edges / nodes))";
  meta["growth_triad_rule"] =
      "coin with probability p_t before every edge after the first; partner drawn from neighbors of the most "
      "recent preferential-attachment target; falls back to preferential attachment";
  root["config"] = meta;

  Json networks = Json::array();
  for (const auto& n : report.networks) {
    Json jn;
    jn["name"] = n.name;
    jn["source"] = n.source;
    Json ingest;
    ingest["lines_read"] = n.ingest.lines_read;
    ingest["self_loops_dropped"] = n.ingest.self_loops_dropped;
    ingest["duplicates_dropped"] = n.ingest.duplicates_dropped;
    jn["ingest"] = ingest;
    if (n.summary) {
      jn["summary"] = Json{{"nodes", n.summary->nodes}, {"edges", n.summary->edges}, {"avg_cc", n.summary->avg_cc}};
    }
    if (n.growth) {
      jn["growth"] = Json{{"n", n.growth->n}, {"n0", n.growth->n0}, {"m", n.growth->m}, {"p_t", n.growth->p_t}};
    }
    if (n.calibration) {
      jn["calibration"] = Json{{"p_t", n.calibration->p_t},
                               {"achieved_cc", n.calibration->achieved_cc},
                               {"iterations", n.calibration->iterations},
                               {"pilot_networks", n.calibration->pilot_networks}};
    }
    jn["replica_seeds"] = n.replica_seeds;

    Json models = Json::array();
    for (const auto& mc : n.models) {
      Json jm;
      jm["model"] = std::string(to_string(mc.model));
      jm["complex"] = std::string(to_string(mc.complex));
      jm["real"] = mc.real ? fit_json(*mc.real) : Json(nullptr);
      jm["reference"] = mc.reference ? Json{{"level", mc.reference->level}, {"mnd", real_or_string(mc.reference->mnd)}}
                                     : Json(nullptr);
      Json reps = Json::array();
      for (const auto& f : mc.replicas) reps.push_back(f ? fit_json(*f) : Json(nullptr));
      jm["replicas"] = reps;
      if (mc.grown_mean_params) {
        jm["grown_mean"] = params_json({mc.model, *mc.grown_mean_params});
        jm["grown_mean_mnd"] = real_or_string(*mc.grown_mean_mnd);
      }
      if (mc.ttests) {
        Json tests;
        const auto names = ModelParams{mc.model, {}}.names();
        for (std::size_t i = 0; i < 3; ++i) {
          const auto& t = (*mc.ttests)[i];
          tests[std::string(names[i])] = Json{{"t_stat", real_or_string(t.t_stat)},
                                              {"df", t.df},
                                              {"p_value", t.p_value},
                                              {"significant_at_99", t.significant_at_99},
                                              {"sample_mean", t.sample_mean},
                                              {"sample_sd", t.sample_sd}};
        }
        jm["ttests"] = tests;
      }
      models.push_back(jm);
    }
    jn["models"] = models;

    Json failures = Json::array();
    for (const auto& f : n.failures) failures.push_back(Json{{"stage", f.stage}, {"message", f.message}});
    jn["failures"] = failures;
    networks.push_back(jn);
  }
  root["networks"] = networks;
  return root.dump(2) + "\n";
}

std::string table1_csv(const Report& report) {
  std::ostringstream out;
  out << "network,nodes,edges,avg_cc\n";
  for (const auto& n : report.networks) {
    out << n.name << ',';
    if (n.summary) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f", n.summary->avg_cc);
      out << n.summary->nodes << ',' << n.summary->edges << ',' << buf << '\n';
    } else {
      out << ",,\n";
    }
  }
  return out.str();
}

std::string table2_csv(const Report& report) {
  auto two = [](std::optional<double> v) -> std::string {
    if (!v || !std::isfinite(*v)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", *v);
    return buf;
  };
  std::ostringstream out;
  out << "network,a,b,c,s_mnd_real/grown/ref,lambda,mu,sigma,emg_mnd_real/grown/ref\n";
  for (const auto& n : report.networks) {
    out << n.name;
    for (const auto& mc : n.models) {
      for (std::size_t i = 0; i < 3; ++i) {
        std::optional<double> real;
        std::optional<double> grown;
        if (mc.real) real = mc.real->params.values[i];
        if (mc.grown_mean_params) grown = (*mc.grown_mean_params)[i];
        const bool sig = mc.ttests && (*mc.ttests)[i].significant_at_99;
        out << ',' << two(real) << " / " << two(grown) << (sig ? "*" : "");
      }
      std::optional<double> real_mnd;
      std::optional<double> ref_mnd;
      if (mc.real) real_mnd = mc.real->mnd;
      if (mc.reference) ref_mnd = mc.reference->mnd;
      out << ',' << two(real_mnd) << " / " << two(mc.grown_mean_mnd) << " / " << two(ref_mnd);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace simplicial
