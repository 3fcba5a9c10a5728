#include "simplicial/fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "simplicial/error.hpp"
#include "simplicial/nelder_mead.hpp"
#include "simplicial/text_format.hpp"

namespace simplicial {

namespace {

constexpr std::size_t kMinFitPoints = 4;
constexpr double kInf = std::numeric_limits<double>::infinity();

double radical_inverse(std::size_t index, unsigned base) {
  double result = 0.0;
  double scale = 1.0 / base;
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale /= base;
  }
  return result;
}

constexpr unsigned kHaltonBases[3] = {2, 3, 5};

struct Interval {
  double lo;
  double hi;
};

// A search region maps unconstrained simplex coordinates onto a valid
// parameter vector. EMG faces pin mu and/or sigma to zero.
struct Region {
  std::vector<Interval> start_box;
  std::vector<double> step;
  std::function<ModelParams(std::span<const double>)> to_params;
};

struct Job {
  std::size_t region;
  std::vector<double> start;
};

struct JobOutcome {
  ModelParams params;
  double sse = kInf;
  bool converged = false;
};

std::vector<Region> regions_for(ModelKind model, double x_max) {
  std::vector<Region> regions;
  if (model == ModelKind::SModel) {
    // (a, ln b, ln c)
    regions.push_back({{{0.0, 3.0}, {std::log(0.01), std::log(2.0)}, {std::log(1e-4), 0.0}},
                       {0.1, 0.1, 0.1},
                       [](std::span<const double> t) { return ModelParams::s_model(t[0], std::exp(t[1]), std::exp(t[2])); }});
    return regions;
  }
  const Interval log_lambda{std::log(1e-3), std::log(5.0)};
  const Interval spread{0.0, x_max};
  const double wide = 0.1 * x_max + 0.1;
  // (ln lambda, mu, sigma) with mu = |u|, sigma = |s|
  regions.push_back({{log_lambda, spread, spread},
                     {0.2, wide, wide},
                     [](std::span<const double> t) { return ModelParams::emg(std::exp(t[0]), std::abs(t[1]), std::abs(t[2])); }});
  regions.push_back({{log_lambda, spread},
                     {0.2, wide},
                     [](std::span<const double> t) { return ModelParams::emg(std::exp(t[0]), std::abs(t[1]), 0.0); }});
  regions.push_back({{log_lambda, spread},
                     {0.2, wide},
                     [](std::span<const double> t) { return ModelParams::emg(std::exp(t[0]), 0.0, std::abs(t[1])); }});
  regions.push_back({{log_lambda},
                     {0.2},
                     [](std::span<const double> t) { return ModelParams::emg(std::exp(t[0]), 0.0, 0.0); }});
  return regions;
}

bool admissible(const ModelParams& p) {
  for (double v : p.values) {
    if (!std::isfinite(v)) return false;
  }
  if (p.model == ModelKind::SModel) return p.values[1] > 0.0 && p.values[2] > 0.0;
  return p.values[0] > 0.0 && p.values[2] >= 0.0;
}

double sum_squared_residuals(const ModelParams& p, LogBase base, std::span<const double> xs,
                             std::span<const double> ys) {
  if (!admissible(p)) return kInf;
  double sse = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = evaluate(p, xs[i], base) - ys[i];
    sse += r * r;
  }
  return sse;
}

template <class Fn>
void run_indexed(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([w, workers, count, &fn] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

}  // namespace

std::string_view to_string(ReferenceRule rule) {
  return rule == ReferenceRule::TailGeometricMean ? "tail_geometric_mean" : "tail_arithmetic_mean";
}

std::vector<std::size_t> fit_support(const DistributionSeries& series, ModelKind model) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!(series.freq[i] > 0.0)) continue;
    if (model == ModelKind::SModel && series.support[i] < 1) continue;
    idx.push_back(i);
  }
  return idx;
}

FitResult fit(ModelKind model, const DistributionSeries& series, const FitOptions& options) {
  const auto idx = fit_support(series, model);
  if (idx.size() < kMinFitPoints) {
    throw FitError("fit needs at least " + std::to_string(kMinFitPoints) + " support points, got " +
                   std::to_string(idx.size()));
  }
  std::vector<double> xs;
  std::vector<double> ys;
  FitResult result;
  for (auto i : idx) {
    xs.push_back(series.support[i]);
    ys.push_back(series.freq[i]);
    result.support.push_back(series.support[i]);
  }
  const double x_max = std::max(1.0, xs.back());
  const auto regions = regions_for(model, x_max);
  const std::size_t starts = std::max<std::size_t>(options.starts, 16);

  std::vector<Job> jobs;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const auto& box = regions[r].start_box;
    for (std::size_t s = 0; s < starts; ++s) {
      std::vector<double> start(box.size());
      for (std::size_t d = 0; d < box.size(); ++d) {
        start[d] = box[d].lo + (box[d].hi - box[d].lo) * radical_inverse(s + 1, kHaltonBases[d]);
      }
      jobs.push_back({r, std::move(start)});
    }
  }

  NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations_per_start;
  std::vector<JobOutcome> outcomes(jobs.size());
  run_indexed(jobs.size(), options.workers, [&](std::size_t j) {
    const Region& region = regions[jobs[j].region];
    auto objective = [&](std::span<const double> t) {
      return sum_squared_residuals(region.to_params(t), options.log_base, xs, ys);
    };
    auto found = nelder_mead(objective, jobs[j].start, region.step, nm);
    auto params = region.to_params(found.x);
    outcomes[j] = {params, sum_squared_residuals(params, options.log_base, xs, ys), found.converged};
  });

  std::size_t best = 0;
  for (std::size_t j = 1; j < outcomes.size(); ++j) {
    if (outcomes[j].sse < outcomes[best].sse) best = j;
  }
  if (!std::isfinite(outcomes[best].sse)) throw FitError("no start produced a finite objective");

  result.params = outcomes[best].params;
  result.log_base = options.log_base;
  result.sse = outcomes[best].sse;
  result.converged = outcomes[best].converged;
  result.restarts = jobs.size();
  result.mnd = mnd(series, result.params, options.log_base);
  return result;
}

double mnd(std::span<const double> observed, std::span<const double> modeled) {
  if (observed.empty()) throw DomainError("MND over an empty support");
  if (observed.size() != modeled.size()) throw DomainError("MND needs matching observed and modeled series");
  double sum = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(observed[i] > 0.0)) throw DomainError("MND needs positive observed values");
    sum += std::abs(modeled[i] - observed[i]) / observed[i];
  }
  return sum / static_cast<double>(observed.size());
}

double mnd(const DistributionSeries& series, const ModelParams& params, LogBase base) {
  std::vector<double> observed;
  std::vector<double> modeled;
  for (auto i : fit_support(series, params.model)) {
    observed.push_back(series.freq[i]);
    modeled.push_back(evaluate(params, series.support[i], base));
  }
  return mnd(observed, modeled);
}

double mnd(const DistributionSeries& series, double level, std::uint32_t min_factor) {
  std::vector<double> observed;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.freq[i] > 0.0 && series.support[i] >= min_factor) observed.push_back(series.freq[i]);
  }
  const std::vector<double> modeled(observed.size(), level);
  return mnd(observed, modeled);
}

ReferenceBaseline reference_constant(const DistributionSeries& series, ReferenceRule rule, std::uint32_t min_factor) {
  std::vector<double> values;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.freq[i] > 0.0 && series.support[i] >= min_factor) values.push_back(series.freq[i]);
  }
  if (values.empty()) throw DomainError("reference baseline over an empty support");
  std::span<const double> tail(values);
  tail = tail.subspan(values.size() / 2);
  if (tail.empty()) tail = values;

  double level = 0.0;
  if (rule == ReferenceRule::TailGeometricMean) {
    double log_sum = 0.0;
    for (double v : tail) log_sum += std::log(v);
    level = std::exp(log_sum / static_cast<double>(tail.size()));
  } else {
    for (double v : tail) level += v;
    level /= static_cast<double>(tail.size());
  }
  return {level, mnd(series, level, min_factor)};
}

std::string fit_result_json(const FitResult& result) {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(result.params.model));
  nlohmann::ordered_json params;
  const auto names = result.params.names();
  for (std::size_t i = 0; i < 3; ++i) params[std::string(names[i])] = result.params.values[i];
  j["params"] = params;
  j["sse"] = result.sse;
  j["mnd"] = result.mnd;
  j["support_min"] = result.support.empty() ? 0u : result.support.front();
  j["support_max"] = result.support.empty() ? 0u : result.support.back();
  j["converged"] = result.converged;
  j["restarts"] = result.restarts;
  return j.dump(2);
}

void write_model_curve_csv(std::ostream& out, const ModelParams& params, LogBase base, std::uint32_t x_min,
                           std::uint32_t x_max) {
  out << "x,model\n";
  for (std::uint32_t x = x_min; x <= x_max; ++x) {
    if (params.model == ModelKind::SModel && x == 0) continue;
    out << x << ',' << format_real(evaluate(params, x, base)) << '\n';
  }
}

}  // namespace simplicial
