#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simplicial/census.hpp"
#include "simplicial/models.hpp"

namespace simplicial {

struct FitOptions {
  LogBase log_base = LogBase::Ten;
  /// Quasi-random (Halton) starts per parameter region; at least 16.
  std::size_t starts = 16;
  std::size_t max_evaluations_per_start = 20000;
  unsigned workers = 1;
};

struct FitResult {
  ModelParams params;
  LogBase log_base = LogBase::Ten;
  double sse = 0.0;
  double mnd = 0.0;
  std::vector<std::uint32_t> support;  ///< factor values the fit used
  std::size_t restarts = 0;            ///< simplex descents run in total
  bool converged = false;
};

/// Indices of `series` a model is fitted and scored on: points with positive
/// frequency, and for the S model only factors >= 1 (log 0 is undefined).
std::vector<std::size_t> fit_support(const DistributionSeries& series, ModelKind model);

/// Least-squares fit of a model to the normalized frequencies over its fit
/// support, by multi-start Nelder-Mead. Starts come from a Halton grid over
///   S:   a in [0, 3], b in (0, 2], c in (0, 1]
///   EMG: lambda in (0, 5], mu and sigma in [0, max support]
/// For the EMG the boundary faces sigma = 0, mu = 0 and mu = sigma = 0 are
/// searched as well, so degenerate exponential fits are reachable exactly.
/// Deterministic: identical input gives a bit-identical result for any
/// worker count. Throws FitError with fewer than 4 support points.
FitResult fit(ModelKind model, const DistributionSeries& series, const FitOptions& options = {});

/// Mean normalized deviation: mean over i of |modeled[i] - observed[i]| / observed[i].
/// Throws DomainError on empty or mismatched input, or a nonpositive observation.
double mnd(std::span<const double> observed, std::span<const double> modeled);

/// MND of a fitted model against the series over fit_support(series, model).
double mnd(const DistributionSeries& series, const ModelParams& params, LogBase base = LogBase::Ten);

/// MND of the horizontal line y = level over points with positive frequency
/// and factor >= min_factor.
double mnd(const DistributionSeries& series, double level, std::uint32_t min_factor = 0);

enum class ReferenceRule {
  TailGeometricMean,  ///< geometric mean of the upper-half tail frequencies
  TailArithmeticMean
};

std::string_view to_string(ReferenceRule rule);

struct ReferenceBaseline {
  double level = 0.0;
  double mnd = 0.0;
};

/// Constant baseline y = level placed on the long tail. Over the points with
/// positive frequency and factor >= min_factor (sorted by factor), the tail
/// is the upper half: indices from size/2 on. The baseline MND is taken over
/// all those points. Throws DomainError when no point qualifies.
ReferenceBaseline reference_constant(const DistributionSeries& series,
                                     ReferenceRule rule = ReferenceRule::TailGeometricMean,
                                     std::uint32_t min_factor = 0);

/// {model, params, sse, mnd, support_min, support_max, converged, restarts}
std::string fit_result_json(const FitResult& result);

/// "x,model" rows over the integer range [x_min, x_max].
void write_model_curve_csv(std::ostream& out, const ModelParams& params, LogBase base, std::uint32_t x_min,
                           std::uint32_t x_max);

}  // namespace simplicial
