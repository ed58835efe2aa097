#pragma once

#include <cstddef>
#include <vector>

#include "fracjet/fracops.hpp"

namespace fracjet {

/// A point (t, x^i, y^{i(alpha a)}) of the order-k fractional jet space over
/// an n-dimensional configuration space. Jet coordinates are stored level by
/// level: y(a, i) with a = 1..k.
class JetPoint {
 public:
  JetPoint(int k, std::size_t n);
  JetPoint(double t, std::vector<double> x, std::vector<double> y_flat, int k);

  int order() const { return k_; }
  std::size_t dim() const { return x_.size(); }

  double t() const { return t_; }
  double& t() { return t_; }
  double x(std::size_t i) const { return x_[i]; }
  double& x(std::size_t i) { return x_[i]; }
  double y(int a, std::size_t i) const { return y_[index(a, i)]; }
  double& y(int a, std::size_t i) { return y_[index(a, i)]; }

  bool is_finite() const;

 private:
  std::size_t index(int a, std::size_t i) const;

  double t_ = 0.0;
  int k_;
  std::vector<double> x_;
  std::vector<double> y_;
};

/// A trajectory lifted to the fractional jet space: the base paths x^i and,
/// for a = 1..k, the scaled derivatives y^{i(alpha a)} = D^(alpha a) x^i / Gamma(1 + alpha a).
class JetTrajectory {
 public:
  /// jets[a-1][i] holds y^{i(alpha a)}. All paths must share one grid.
  JetTrajectory(double alpha, std::vector<SampledPath> base, std::vector<std::vector<SampledPath>> jets);

  double alpha() const { return alpha_; }
  int order() const { return static_cast<int>(jets_.size()); }
  std::size_t dim() const { return base_.size(); }
  std::size_t size() const { return base_.front().size(); }
  double t(std::size_t node) const { return base_.front().t(node); }
  const SampledPath& grid() const { return base_.front(); }

  const SampledPath& position(std::size_t i) const { return base_[i]; }
  const SampledPath& jet(int a, std::size_t i) const;

  JetPoint point(std::size_t node) const;

 private:
  double alpha_;
  std::vector<SampledPath> base_;
  std::vector<std::vector<SampledPath>> jets_;
};

/// Lifts n paths to order k: y^{i(alpha a)} = frac_deriv(x^i, alpha a) / Gamma(1 + alpha a).
/// Requires 0 < alpha < 1 and k >= 1; propagates frac_deriv errors.
JetTrajectory lift(const std::vector<SampledPath>& paths, double alpha, int k);
JetTrajectory lift(const SampledPath& path, double alpha, int k);

/// Truncated fractional McLaurin reconstruction from a jet point at t = 0:
///   x^i(t) ~ x^i + sum_a t^(alpha a) y^{i(alpha a)}.
std::vector<double> taylor_reconstruct(const JetPoint& point, double alpha, double t_eval);

}  // namespace fracjet
