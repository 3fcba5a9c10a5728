#pragma once

#include <array>
#include <string_view>

namespace simplicial {

enum class ModelKind {
  SModel,  ///< c * (b * x^-a)^(log x), fitted to S-complex distributions
  Emg      ///< exponentially modified Gaussian, fitted to T-complex distributions
};

std::string_view to_string(ModelKind kind);

enum class LogBase { Ten, E };

std::string_view to_string(LogBase base);

/// S model: values = (a, b, c). EMG: values = (lambda, mu, sigma).
struct ModelParams {
  ModelKind model = ModelKind::SModel;
  std::array<double, 3> values{};

  static ModelParams s_model(double a, double b, double c) { return {ModelKind::SModel, {a, b, c}}; }
  static ModelParams emg(double lambda, double mu, double sigma) { return {ModelKind::Emg, {lambda, mu, sigma}}; }

  /// Parameter names in `values` order.
  std::array<std::string_view, 3> names() const;
};

/// c * (b * x^-a)^(log x). Requires x > 0, b > 0, c > 0 (DomainError otherwise).
double eval_s_model(double x, double a, double b, double c, LogBase base = LogBase::Ten);

/// Exponentially modified Gaussian density
///   lambda/2 * exp(lambda/2 * (2 mu + lambda sigma^2 - 2x))
///           * erfc((mu + lambda sigma^2 - x) / (sqrt(2) sigma)).
/// Evaluated in a scaled form that does not overflow for large erfc
/// arguments. sigma = 0 gives the limit lambda * exp(-lambda (x - mu)) for
/// x >= mu and 0 below. Requires lambda > 0 and sigma >= 0.
double eval_emg(double x, double lambda, double mu, double sigma);

double evaluate(const ModelParams& p, double x, LogBase base = LogBase::Ten);

}  // namespace simplicial
