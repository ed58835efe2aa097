#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fracjet/fodesolve.hpp"

namespace fracjet {

/// Catalog entry describing one model equation.
struct ModelInfo {
  std::string name;
  std::string classical_form;
  std::string fractional_form;
  std::vector<std::string> parameters;
  double classical_alpha;  // alpha at which the fractional form is the classical one
  std::string note;
};

const std::vector<ModelInfo>& model_catalog();

/// Throws DomainError for unknown names.
const ModelInfo& find_model(std::string_view name);

struct ModelParams {
  std::map<std::string, double> values;     // missing coefficients default to 1 (x0, v0 to 0)
  std::function<double(double)> forcing;   // f(t), defaults to 0
  std::function<double(double, double)> potential_dx;  // dU/dx for friction, defaults to -x
  double T = 1.0;
};

using ModelInstance = std::variant<MultiTermFDE, FODE2>;

/// Builds a model at base order alpha (defaults to the entry's classical
/// alpha). Linear models become MultiTermFDE with zero initial state:
///   phillips        D^(4a) x + a1 D^(2a) x + b1 x = -f
///   business-cycle  D^(6a) x + a2 D^(4a) x + a1 D^(2a) x + b1 x = -f
///   bagley-torvik   a D^(8a) x + b D^(6a) x + c x = f
/// friction (m D^(4a) x + gamma D^(2a) x - dU/dx = 0) becomes a FODE2 with
/// base order 2a and initial values x0, v0.
ModelInstance instantiate_model(std::string_view name, const ModelParams& params,
                                std::optional<double> alpha = std::nullopt);

}  // namespace fracjet
