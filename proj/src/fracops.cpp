#include "fracjet/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracjet/error.hpp"
#include "fracjet/specfun.hpp"

namespace fracjet {
namespace {

constexpr double kIntegerSnap = 1e-12;
constexpr double kIbpEndpointTol = 1e-8;

// Base-value-subtracted samples g = x - P, P the degree m-1 Taylor
// polynomial at the first node. Derivatives of P are second-order one-sided
// differences over nodes 0..d+1, applied to x - x0 so a constant input
// gives g == 0 exactly.
std::vector<double> subtract_taylor(std::span<const double> x, double h, int m) {
  const double x0 = x.front();
  std::vector<double> g(x.size());
  std::transform(x.begin(), x.end(), g.begin(), [x0](double v) { return v - x0; });
  if (m <= 1) {
    return g;
  }
  std::vector<double> coeffs(static_cast<std::size_t>(m), 0.0);
  double factorial = 1.0;
  for (int d = 1; d < m; ++d) {
    factorial *= d;
    std::vector<double> nodes(static_cast<std::size_t>(d + 2));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      nodes[i] = static_cast<double>(i);
    }
    const auto w = fd_weights(0.0, nodes, d);
    double deriv = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      deriv += w[i] * (x[i] - x0);
    }
    coeffs[static_cast<std::size_t>(d)] = deriv / (std::pow(h, d) * factorial);
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double tj = static_cast<double>(j) * h;
    double p = 0.0;
    for (int d = m - 1; d >= 1; --d) {
      p = (p + coeffs[static_cast<std::size_t>(d)]) * tj;
    }
    g[j] -= p;
  }
  return g;
}

double convolve_at(std::span<const double> w, std::span<const double> g, std::size_t j) {
  double acc = 0.0;
  for (std::size_t k = 0; k <= j; ++k) {
    acc += w[k] * g[j - k];
  }
  return acc;
}

std::vector<double> left_derivative(std::span<const double> x, double h, const FracOrder& order) {
  const auto g = subtract_taylor(x, h, order.m());
  const auto w = gl_weights(order, x.size());
  const double scale = std::pow(h, -order.mu());
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = scale * convolve_at(w, g, j);
  }
  out[0] = out[1];
  return out;
}

void require_min_points(std::size_t n, const FracOrder& order, const char* who) {
  const auto needed = static_cast<std::size_t>(order.m()) + 2;
  if (n < needed) {
    throw DomainError(std::string(who) + ": order " + std::to_string(order.mu()) + " needs at least " +
                      std::to_string(needed) + " samples, got " + std::to_string(n));
  }
}

void require_same_grid(const SampledPath& a, const SampledPath& b, const char* who) {
  if (!a.same_grid(b)) {
    throw DomainError(std::string(who) + ": paths must share the same grid");
  }
}

}  // namespace

SampledPath::SampledPath(double t0, double h, std::vector<double> values)
    : t0_(t0), h_(h), values_(std::move(values)) {
  if (!(h_ > 0.0) || !std::isfinite(h_)) {
    throw DomainError("SampledPath: step must be positive and finite");
  }
  if (values_.size() < 2) {
    throw DomainError("SampledPath: at least two samples are required");
  }
}

SampledPath SampledPath::sample(double t0, double t1, std::size_t n_pts,
                                const std::function<double(double)>& f) {
  if (n_pts < 2 || !(t1 > t0)) {
    throw DomainError("SampledPath::sample: need t1 > t0 and at least two nodes");
  }
  const double h = (t1 - t0) / static_cast<double>(n_pts - 1);
  std::vector<double> v(n_pts);
  for (std::size_t j = 0; j < n_pts; ++j) {
    v[j] = f(t0 + static_cast<double>(j) * h);
  }
  return SampledPath(t0, h, std::move(v));
}

bool SampledPath::same_grid(const SampledPath& other) const {
  const double tol = 1e-12 * std::max({1.0, std::abs(t0_), std::abs(other.t0_)});
  return size() == other.size() && std::abs(t0_ - other.t0_) <= tol &&
         std::abs(h_ - other.h_) <= 1e-12 * h_;
}

SampledPath SampledPath::with_values(std::vector<double> values) const {
  if (values.size() != size()) {
    throw DomainError("SampledPath::with_values: size mismatch");
  }
  return SampledPath(t0_, h_, std::move(values));
}

FracOrder::FracOrder(double mu) : mu_(mu), m_(0) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw DomainError("FracOrder: order must be positive and finite, got " + std::to_string(mu));
  }
  const double nearest = std::round(mu);
  if (std::abs(mu - nearest) <= kIntegerSnap * std::max(1.0, nearest)) {
    mu_ = nearest;
  }
  m_ = static_cast<int>(std::ceil(mu_));
}

std::vector<double> gl_weights(const FracOrder& order, std::size_t count) {
  return gl_weights(order.mu(), count);
}

std::vector<double> gl_weights(double mu, std::size_t count) {
  if (count == 0) {
    throw DomainError("gl_weights: count must be at least 1");
  }
  std::vector<double> w(count);
  w[0] = 1.0;
  for (std::size_t k = 1; k < count; ++k) {
    w[k] = w[k - 1] * (1.0 - (mu + 1.0) / static_cast<double>(k));
  }
  return w;
}

SampledPath frac_deriv(const SampledPath& path, const FracOrder& order, Side side) {
  require_min_points(path.size(), order, "frac_deriv");
  if (side == Side::left) {
    return path.with_values(left_derivative(path.values(), path.h(), order));
  }
  std::vector<double> reversed(path.values().rbegin(), path.values().rend());
  auto d = left_derivative(reversed, path.h(), order);
  std::reverse(d.begin(), d.end());
  return path.with_values(std::move(d));
}

double frac_deriv_last(std::span<const double> values, double h, const FracOrder& order) {
  require_min_points(values.size(), order, "frac_deriv_last");
  const auto g = subtract_taylor(values, h, order.m());
  const auto w = gl_weights(order, values.size());
  return std::pow(h, -order.mu()) * convolve_at(w, g, values.size() - 1);
}

SampledPath frac_integral(const SampledPath& path, double order) {
  if (!(order > 0.0)) {
    throw DomainError("frac_integral: order must be positive");
  }
  const auto w = gl_weights(-order, path.size());
  const double scale = std::pow(path.h(), order);
  std::vector<double> out(path.size());
  for (std::size_t j = 0; j < path.size(); ++j) {
    out[j] = scale * convolve_at(w, path.values(), j);
  }
  return path.with_values(std::move(out));
}

double leibniz_series(const SampledPath& f1, const SampledPath& f2, const FracOrder& alpha,
                      std::size_t at_index, std::size_t terms) {
  require_same_grid(f1, f2, "leibniz_series");
  if (alpha.mu() >= 1.0) {
    throw DomainError("leibniz_series: order must be below 1");
  }
  if (terms < 1 || at_index >= f1.size() || terms > at_index) {
    throw DomainError("leibniz_series: need 1 <= terms <= at_index < n_pts");
  }
  const std::size_t max_radius = (terms - 1 + 1) / 2;
  if (at_index < max_radius || at_index + max_radius >= f1.size()) {
    throw DomainError("leibniz_series: grid too short for the " + std::to_string(terms - 1) +
                      "-th central difference at node " + std::to_string(at_index));
  }
  const double h = f1.h();
  double sum = gen_binomial(alpha.mu(), 0) * frac_deriv(f1, alpha)[at_index] * f2[at_index];
  for (std::size_t k = 1; k < terms; ++k) {
    const auto radius = static_cast<std::ptrdiff_t>((k + 1) / 2);
    std::vector<double> nodes;
    for (std::ptrdiff_t i = -radius; i <= radius; ++i) {
      nodes.push_back(static_cast<double>(i));
    }
    const auto w = fd_weights(0.0, nodes, static_cast<int>(k));
    double dk = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      dk += w[i] * f2[at_index + i - static_cast<std::size_t>(radius)];
    }
    dk /= std::pow(h, static_cast<double>(k));
    const double integral = frac_integral(f1, static_cast<double>(k) - alpha.mu())[at_index];
    sum += gen_binomial(alpha.mu(), k) * integral * dk;
  }
  return sum;
}

IbpResult ibp_residual(const SampledPath& f1, const SampledPath& f2, const FracOrder& alpha) {
  require_same_grid(f1, f2, "ibp_residual");
  if (alpha.mu() >= 1.0) {
    throw DomainError("ibp_residual: order must be below 1");
  }
  const auto d_left = frac_deriv(f2, alpha, Side::left);
  const auto d_right = frac_deriv(f1, alpha, Side::right);
  std::vector<double> a(f1.size());
  std::vector<double> b(f1.size());
  for (std::size_t j = 0; j < f1.size(); ++j) {
    a[j] = f1[j] * d_left[j];
    b[j] = f2[j] * d_right[j];
  }
  IbpResult result;
  result.residual = trapezoid(f1.with_values(std::move(a))) - trapezoid(f1.with_values(std::move(b)));
  const auto n = f1.size() - 1;
  result.endpoint_warning = std::max({std::abs(f1[0]), std::abs(f1[n]), std::abs(f2[0]),
                                      std::abs(f2[n])}) > kIbpEndpointTol;
  return result;
}

double trapezoid(const SampledPath& path) {
  const auto v = path.values();
  double acc = 0.5 * (v.front() + v.back());
  for (std::size_t j = 1; j + 1 < v.size(); ++j) {
    acc += v[j];
  }
  return acc * path.h();
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int deriv) {
  const auto n = nodes.size();
  if (deriv < 0 || n < static_cast<std::size_t>(deriv) + 1) {
    throw DomainError("fd_weights: need at least deriv + 1 nodes");
  }
  const auto md = static_cast<std::size_t>(deriv);
  std::vector<std::vector<double>> c(n, std::vector<double>(md + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, md);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = c[i][md];
  }
  return w;
}

}  // namespace fracjet
