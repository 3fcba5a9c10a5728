#include "simplicial/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace simplicial {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

struct Run {
  Vertex best;
  bool converged;
};

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::span<const double> step,
                             const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  std::size_t evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    const double f = objective(x);
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
  };

  auto descend = [&](const Vertex& origin) -> Run {
    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    simplex.push_back(origin);
    for (std::size_t i = 0; i < dim; ++i) {
      Vertex v{origin.x, 0.0};
      v.x[i] += step[i];
      v.f = eval(v.x);
      simplex.push_back(std::move(v));
    }
    std::vector<double> centroid(dim);
    auto along = [&](double t, const std::vector<double>& worst) {
      std::vector<double> p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = centroid[i] + t * (worst[i] - centroid[i]);
      return p;
    };

    while (true) {
      std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex& l, const Vertex& r) { return l.f < r.f; });
      const Vertex& best = simplex.front();
      const Vertex& worst = simplex.back();

      double spread_x = 0.0;
      for (std::size_t k = 1; k <= dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
          spread_x = std::max(spread_x, std::abs(simplex[k].x[i] - best.x[i]));
        }
      }
      const double spread_f = worst.f - best.f;
      if (std::isfinite(best.f) && spread_f <= options.f_tolerance_abs + options.f_tolerance_rel * std::abs(best.f) &&
          spread_x <= options.x_tolerance) {
        return {best, true};
      }
      if (evaluations >= options.max_evaluations) return {best, false};

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k].x[i];
      }
      for (double& c : centroid) c /= static_cast<double>(dim);

      Vertex reflected{along(-kReflect, worst.x), 0.0};
      reflected.f = eval(reflected.x);
      if (reflected.f < best.f) {
        Vertex expanded{along(-kExpand, worst.x), 0.0};
        expanded.f = eval(expanded.x);
        simplex.back() = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
        continue;
      }
      if (reflected.f < simplex[dim - 1].f) {
        simplex.back() = std::move(reflected);
        continue;
      }
      const bool outside = reflected.f < worst.f;
      Vertex contracted{along(outside ? -kContract : kContract, worst.x), 0.0};
      contracted.f = eval(contracted.x);
      if (contracted.f < (outside ? reflected.f : worst.f)) {
        simplex.back() = std::move(contracted);
        continue;
      }
      for (std::size_t k = 1; k <= dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
          simplex[k].x[i] = simplex[0].x[i] + kShrink * (simplex[k].x[i] - simplex[0].x[i]);
        }
        simplex[k].f = eval(simplex[k].x);
      }
    }
  };

  Vertex incumbent{std::move(start), 0.0};
  incumbent.f = eval(incumbent.x);
  Run run = descend(incumbent);
  for (unsigned r = 0; r < options.max_restarts && run.converged && evaluations < options.max_evaluations; ++r) {
    const double before = run.best.f;
    Run again = descend(run.best);
    const bool improved = again.best.f < before - (options.f_tolerance_abs + options.f_tolerance_rel * std::abs(before));
    if (again.best.f <= run.best.f) run.best = std::move(again.best);
    run.converged = again.converged || run.converged;
    if (!improved) break;
  }
  return {std::move(run.best.x), run.best.f, evaluations, run.converged};
}

}  // namespace simplicial
