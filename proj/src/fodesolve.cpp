#include "fracjet/fodesolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracjet/error.hpp"

namespace fracjet {
namespace {

constexpr double kDivergenceLimit = 1e12;

std::size_t step_count(double T, double h) {
  if (!(h > 0.0) || !(T > 0.0)) {
    throw DomainError("solver: step and interval length must be positive");
  }
  const double ratio = T / h;
  const auto n = static_cast<std::size_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(n)) > 1e-8 * ratio) {
    throw DomainError("solver: T / h must be an integer");
  }
  if (n < 8) {
    throw DomainError("solver: need at least 8 steps (T / h >= 8)");
  }
  return n;
}

}  // namespace

void MultiTermFDE::validate() const {
  if (terms.empty()) {
    throw DomainError("MultiTermFDE: at least one derivative term is required");
  }
  if (!(T > 0.0)) {
    throw DomainError("MultiTermFDE: interval length must be positive");
  }
  auto sorted = sorted_terms();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].order.mu() == sorted[i - 1].order.mu()) {
      throw DomainError("MultiTermFDE: orders must be distinct");
    }
  }
  if (sorted.front().coefficient == 0.0) {
    throw DomainError("MultiTermFDE: leading coefficient must be non-zero");
  }
}

std::vector<FdeTerm> MultiTermFDE::sorted_terms() const {
  auto sorted = terms;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FdeTerm& a, const FdeTerm& b) { return a.order.mu() > b.order.mu(); });
  return sorted;
}

double MultiTermFDE::max_order() const {
  double mu = 0.0;
  for (const auto& t : terms) mu = std::max(mu, t.order.mu());
  return mu;
}

std::size_t interior_margin(double max_order) {
  return static_cast<std::size_t>(std::ceil(max_order)) + 1;
}

SolveReport solve_multiterm(const MultiTermFDE& fde, double h) {
  fde.validate();
  const std::size_t steps = step_count(fde.T, h);
  const std::size_t n = steps + 1;

  // Combined history weights W_k = sum_terms c h^-mu w_k^(mu).
  std::vector<double> W(n, 0.0);
  for (const auto& term : fde.terms) {
    const auto w = gl_weights(term.order, n);
    const double scale = term.coefficient * std::pow(h, -term.order.mu());
    for (std::size_t k = 0; k < n; ++k) W[k] += scale * w[k];
  }
  const double diag = W[0] + fde.zero_order_coeff;
  if (diag == 0.0 || !std::isfinite(diag)) {
    throw NumericalError("solve_multiterm: degenerate step, diagonal coefficient is zero");
  }

  auto forcing = [&](double t) { return fde.forcing ? fde.forcing(t) : 0.0; };
  std::vector<double> x(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    double hist = 0.0;
    for (std::size_t k = 1; k <= j; ++k) hist += W[k] * x[j - k];
    x[j] = (forcing(static_cast<double>(j) * h) - hist) / diag;
    if (!std::isfinite(x[j])) {
      throw NumericalError("solve_multiterm: non-finite value at step " + std::to_string(j));
    }
  }

  double defect = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    double lhs = fde.zero_order_coeff * x[j];
    for (std::size_t k = 0; k <= j; ++k) lhs += W[k] * x[j - k];
    defect = std::max(defect, std::abs(lhs - forcing(static_cast<double>(j) * h)));
  }
  return {SampledPath(0.0, h, std::move(x)), std::nullopt, defect, steps};
}

SolveReport solve_fode2(const FODE2& f, double h) {
  if (!(f.alpha > 0.0 && f.alpha <= 1.0)) {
    throw DomainError("solve_fode2: alpha must lie in (0, 1]");
  }
  if (!f.rhs) {
    throw DomainError("solve_fode2: missing right-hand side");
  }
  const std::size_t steps = step_count(f.T, h);
  const std::size_t n = steps + 1;
  const auto w = gl_weights(f.alpha, n);
  const double ha = std::pow(h, f.alpha);

  std::vector<double> x(n, f.x0);
  std::vector<double> v(n, f.v0);
  std::vector<double> F(n, 0.0);
  auto history = [&](const std::vector<double>& u, double base, std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= j; ++k) acc += w[k] * (u[j - k] - base);
    return acc;
  };
  for (std::size_t j = 1; j < n; ++j) {
    const double tp = static_cast<double>(j - 1) * h;
    F[j - 1] = f.rhs(tp, x[j - 1], v[j - 1]);
    x[j] = f.x0 - history(x, f.x0, j) + ha * v[j - 1];
    v[j] = f.v0 - history(v, f.v0, j) + ha * F[j - 1];
    if (!std::isfinite(x[j]) || std::abs(x[j]) > kDivergenceLimit) {
      throw NumericalError("solve_fode2: solution diverged at t = " + std::to_string(static_cast<double>(j) * h));
    }
  }

  double defect = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double dx = ((x[j] - f.x0) + history(x, f.x0, j)) / ha - v[j - 1];
    const double dv = ((v[j] - f.v0) + history(v, f.v0, j)) / ha - F[j - 1];
    defect = std::max({defect, std::abs(dx), std::abs(dv)});
  }
  return {SampledPath(0.0, h, std::move(x)), SampledPath(0.0, h, std::move(v)), defect, steps};
}

SampledPath fde_residual(const MultiTermFDE& fde, const SampledPath& path) {
  fde.validate();
  std::vector<double> r(path.size(), 0.0);
  for (std::size_t j = 0; j < path.size(); ++j) {
    r[j] = fde.zero_order_coeff * path[j] - (fde.forcing ? fde.forcing(path.t(j)) : 0.0);
  }
  for (const auto& term : fde.terms) {
    const auto d = frac_deriv(path, term.order, Side::left);
    for (std::size_t j = 0; j < path.size(); ++j) r[j] += term.coefficient * d[j];
  }
  const std::size_t margin = interior_margin(fde.max_order());
  for (std::size_t j = 0; j < path.size(); ++j) {
    if (j < margin || j + margin >= path.size()) r[j] = 0.0;
  }
  return path.with_values(std::move(r));
}

std::optional<FODE2> as_fode2(const MultiTermFDE& fde, double x0, double v0) {
  fde.validate();
  const auto sorted = fde.sorted_terms();
  const double top = sorted.front().order.mu();
  const double beta = 0.5 * top;
  if (beta > 1.0 || sorted.size() > 2) {
    return std::nullopt;
  }
  double damping = 0.0;
  if (sorted.size() == 2) {
    if (std::abs(sorted[1].order.mu() - beta) > 1e-12) return std::nullopt;
    damping = sorted[1].coefficient;
  }
  const double lead = sorted.front().coefficient;
  const double c0 = fde.zero_order_coeff;
  auto forcing = fde.forcing;
  FODE2 out;
  out.alpha = beta;
  out.x0 = x0;
  out.v0 = v0;
  out.T = fde.T;
  out.rhs = [=](double t, double x, double v) {
    const double f = forcing ? forcing(t) : 0.0;
    return (f - damping * v - c0 * x) / lead;
  };
  return out;
}

}  // namespace fracjet
