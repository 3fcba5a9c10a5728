#include "simplicial/models.hpp"

#include <cmath>
#include <numbers>

#include "simplicial/error.hpp"
#include "simplicial/special_functions.hpp"

namespace simplicial {

std::string_view to_string(ModelKind kind) { return kind == ModelKind::SModel ? "s_model" : "emg"; }

std::string_view to_string(LogBase base) { return base == LogBase::Ten ? "10" : "e"; }

std::array<std::string_view, 3> ModelParams::names() const {
  if (model == ModelKind::SModel) return {"a", "b", "c"};
  return {"lambda", "mu", "sigma"};
}

double eval_s_model(double x, double a, double b, double c, LogBase base) {
  if (!(x > 0.0)) throw DomainError("S model needs x > 0");
  if (!(b > 0.0) || !(c > 0.0)) throw DomainError("S model needs b > 0 and c > 0");
  const double lx = std::log(x);
  const double exponent = base == LogBase::Ten ? lx / std::numbers::ln10 : lx;
  return c * std::exp(exponent * (std::log(b) - a * lx));
}

double eval_emg(double x, double lambda, double mu, double sigma) {
  if (!(lambda > 0.0)) throw DomainError("EMG needs lambda > 0");
  if (!(sigma >= 0.0)) throw DomainError("EMG needs sigma >= 0");
  if (sigma == 0.0) return x >= mu ? lambda * std::exp(-lambda * (x - mu)) : 0.0;
  const double z = (mu + lambda * sigma * sigma - x) / (std::numbers::sqrt2 * sigma);
  if (z >= 0.0) {
    // exp(E) erfc(z) = exp(E - z^2) erfcx(z) and E - z^2 = -(x - mu)^2 / (2 sigma^2)
    const double d = (x - mu) / sigma;
    return 0.5 * lambda * std::exp(-0.5 * d * d) * erfcx(z);
  }
  // z < 0 implies the exponent is at most -(lambda sigma)^2 / 2
  const double exponent = lambda * (mu - x) + 0.5 * lambda * lambda * sigma * sigma;
  return 0.5 * lambda * std::exp(exponent) * erfc(z);
}

double evaluate(const ModelParams& p, double x, LogBase base) {
  const auto& v = p.values;
  return p.model == ModelKind::SModel ? eval_s_model(x, v[0], v[1], v[2], base) : eval_emg(x, v[0], v[1], v[2]);
}

}  // namespace simplicial
