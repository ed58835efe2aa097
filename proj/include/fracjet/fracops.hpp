#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracjet {

/// A real function sampled on the uniform grid t_j = t0 + j h, j = 0..n-1.
class SampledPath {
 public:
  SampledPath(double t0, double h, std::vector<double> values);

  /// Samples f on n_pts equally spaced nodes covering [t0, t1].
  static SampledPath sample(double t0, double t1, std::size_t n_pts,
                            const std::function<double(double)>& f);

  double t0() const { return t0_; }
  double h() const { return h_; }
  std::size_t size() const { return values_.size(); }
  double t(std::size_t j) const { return t0_ + static_cast<double>(j) * h_; }
  double t_end() const { return t(values_.size() - 1); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  double& operator[](std::size_t j) { return values_[j]; }

  bool same_grid(const SampledPath& other) const;
  SampledPath with_values(std::vector<double> values) const;

 private:
  double t0_;
  double h_;
  std::vector<double> values_;
};

/// A positive derivative order mu together with m = ceil(mu).
///
/// Orders within 1e-12 of an integer are snapped to it so that products such
/// as 4 * 0.25 land on the integer branch.
class FracOrder {
 public:
  explicit FracOrder(double mu);

  double mu() const { return mu_; }
  int m() const { return m_; }
  bool is_integer() const { return mu_ == static_cast<double>(m_); }

 private:
  double mu_;
  int m_;
};

enum class Side { left, right };

/// Grunwald-Letnikov weights w_k = (-1)^k binom(mu, k) from the recurrence
/// w_k = w_{k-1} (1 - (mu + 1) / k).
std::vector<double> gl_weights(const FracOrder& order, std::size_t count);

/// Same recurrence for an arbitrary real order; a negative order gives the
/// weights of the fractional integral of order -mu.
std::vector<double> gl_weights(double mu, std::size_t count);

/// Fractional derivative of a sampled path on its own grid.
///
/// Left: D^mu x(t_j) ~ h^-mu sum_{k<=j} w_k g(t_{j-k}) with g = x - P, where P
/// is the degree m-1 Taylor polynomial of x at t0 (estimated by one-sided
/// differences; for mu < 1 it is the constant x(t0)). Subtracting P makes
/// constants map to exactly zero and gives the Caputo-type regularization.
/// Right mirrors the construction from the terminal node.
///
/// The value at the base node (t0 for left, the last node for right) is the
/// copy of its neighbour, since the true limit is singular for rough paths.
///
/// Throws DomainError if the path has fewer than m + 2 samples.
SampledPath frac_deriv(const SampledPath& path, const FracOrder& order, Side side = Side::left);

/// Left fractional derivative evaluated at the last node only; O(n) instead
/// of O(n^2). Matches frac_deriv(...)[n-1] up to rounding.
double frac_deriv_last(std::span<const double> values, double h, const FracOrder& order);

/// Left Grunwald-Letnikov fractional integral of the given positive order.
/// No base value is subtracted.
SampledPath frac_integral(const SampledPath& path, double order);

/// Truncated Leibniz series for D^alpha (f1 f2) at one node:
///   sum_{k<terms} binom(alpha, k) (D^(alpha-k) f1)(t) f2^(k)(t).
/// For k >= 1 the operator is a fractional integral; f2^(k) is a central
/// difference. Requires alpha < 1 and a node far enough from both ends.
double leibniz_series(const SampledPath& f1, const SampledPath& f2, const FracOrder& alpha,
                      std::size_t at_index, std::size_t terms);

struct IbpResult {
  double residual = 0.0;
  bool endpoint_warning = false;  // some endpoint value exceeds 1e-8
};

/// int f1 (D_left f2) dt - int f2 (D_right f1) dt by the trapezoid rule.
/// Vanishes in the continuum limit for paths that vanish at both ends.
IbpResult ibp_residual(const SampledPath& f1, const SampledPath& f2, const FracOrder& alpha);

/// Composite trapezoid rule over the whole grid.
double trapezoid(const SampledPath& path);

/// Fornberg finite-difference weights: the returned w gives
/// f^(deriv)(x0) ~ sum_i w_i f(nodes_i).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int deriv);

}  // namespace fracjet
