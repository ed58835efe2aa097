#include "fracjet/models.hpp"

#include <string>

#include "fracjet/error.hpp"

namespace fracjet {
namespace {

double value_or(const ModelParams& p, const std::string& key, double fallback) {
  const auto it = p.values.find(key);
  return it == p.values.end() ? fallback : it->second;
}

MultiTermFDE linear_model(std::vector<std::pair<double, double>> terms, double c0,
                          std::function<double(double)> forcing, double T) {
  MultiTermFDE fde;
  for (const auto& [c, mu] : terms) {
    if (c != 0.0) fde.terms.push_back({c, FracOrder(mu)});
  }
  fde.zero_order_coeff = c0;
  fde.forcing = std::move(forcing);
  fde.T = T;
  fde.validate();
  return fde;
}

}  // namespace

const std::vector<ModelInfo>& model_catalog() {
  static const std::vector<ModelInfo> catalog = {
      {"friction", "m x'' + gamma x' - dU/dx = 0", "m D^(4a) x + gamma D^(2a) x - dU/dx(t, x) = 0",
       {"m", "gamma", "x0", "v0"}, 0.5, "nonlinear; solved as a pair system of base order 2a"},
      {"phillips", "x'' + a1 x' + b1 x + f = 0", "D^(4a) x + a1 D^(2a) x + b1 x + f = 0",
       {"a1", "b1"}, 0.5, "zero initial state"},
      {"business-cycle", "x''' + a2 x'' + a1 x' + b1 x + f = 0",
       "D^(6a) x + a2 D^(4a) x + a1 D^(2a) x + b1 x + f = 0", {"a1", "a2", "b1"}, 0.5, "zero initial state"},
      {"bagley-torvik", "a x'' + b D^(3/2) x + c x - f = 0", "a D^(8a) x + b D^(6a) x + c x - f = 0",
       {"a", "b", "c"}, 0.25, "orders (2, 3/2) at a = 1/4; zero initial state x(0) = x'(0) = 0"},
  };
  return catalog;
}

const ModelInfo& find_model(std::string_view name) {
  for (const auto& m : model_catalog()) {
    if (m.name == name) return m;
  }
  throw DomainError("unknown model '" + std::string(name) + "'");
}

ModelInstance instantiate_model(std::string_view name, const ModelParams& params, std::optional<double> alpha) {
  const ModelInfo& info = find_model(name);
  const double a = alpha.value_or(info.classical_alpha);
  if (!(a > 0.0)) {
    throw DomainError("model alpha must be positive");
  }
  auto f = params.forcing;
  auto minus_f = [f](double t) { return f ? -f(t) : 0.0; };

  if (name == "phillips") {
    return linear_model({{1.0, 4 * a}, {value_or(params, "a1", 1.0), 2 * a}}, value_or(params, "b1", 1.0),
                        minus_f, params.T);
  }
  if (name == "business-cycle") {
    return linear_model({{1.0, 6 * a}, {value_or(params, "a2", 1.0), 4 * a}, {value_or(params, "a1", 1.0), 2 * a}},
                        value_or(params, "b1", 1.0), minus_f, params.T);
  }
  if (name == "bagley-torvik") {
    return linear_model({{value_or(params, "a", 1.0), 8 * a}, {value_or(params, "b", 1.0), 6 * a}},
                        value_or(params, "c", 1.0), f ? f : [](double) { return 0.0; }, params.T);
  }
  // friction
  const double m = value_or(params, "m", 1.0);
  const double damping = value_or(params, "gamma", 1.0);
  if (m == 0.0) {
    throw DomainError("friction: mass must be non-zero");
  }
  auto dU = params.potential_dx ? params.potential_dx : [](double, double x) { return -x; };
  FODE2 out;
  out.alpha = 2 * a;
  if (out.alpha > 1.0) {
    throw DomainError("friction: base order 2a must not exceed 1");
  }
  out.x0 = value_or(params, "x0", 0.0);
  out.v0 = value_or(params, "v0", 0.0);
  out.T = params.T;
  out.rhs = [=](double t, double x, double v) { return (dU(t, x) - damping * v) / m; };
  return out;
}

}  // namespace fracjet
