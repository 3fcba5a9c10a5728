#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace simplicial {

struct NelderMeadOptions {
  std::size_t max_evaluations = 20000;
  double f_tolerance_abs = 1e-32;
  double f_tolerance_rel = 1e-15;
  double x_tolerance = 1e-11;
  /// Fresh simplices built around the incumbent after each convergence.
  unsigned max_restarts = 6;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Derivative-free downhill simplex minimization. `step` gives the initial
/// simplex edge per coordinate. Non-finite objective values are treated as
/// +infinity, which lets callers reject infeasible points.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::span<const double> step,
                             const NelderMeadOptions& options = {});

}  // namespace simplicial
