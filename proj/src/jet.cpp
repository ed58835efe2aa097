#include "fracjet/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracjet/error.hpp"
#include "fracjet/specfun.hpp"

namespace fracjet {

JetPoint::JetPoint(int k, std::size_t n) : k_(k), x_(n, 0.0), y_(static_cast<std::size_t>(k) * n, 0.0) {
  if (k < 1 || n < 1) {
    throw DomainError("JetPoint: order and dimension must be positive");
  }
}

JetPoint::JetPoint(double t, std::vector<double> x, std::vector<double> y_flat, int k)
    : t_(t), k_(k), x_(std::move(x)), y_(std::move(y_flat)) {
  if (k < 1 || x_.empty() || y_.size() != static_cast<std::size_t>(k) * x_.size()) {
    throw DomainError("JetPoint: y must hold k * n entries");
  }
}

std::size_t JetPoint::index(int a, std::size_t i) const {
  if (a < 1 || a > k_ || i >= x_.size()) {
    throw DomainError("JetPoint: jet index (" + std::to_string(a) + ", " + std::to_string(i) +
                      ") out of range");
  }
  return static_cast<std::size_t>(a - 1) * x_.size() + i;
}

bool JetPoint::is_finite() const {
  auto finite = [](double v) { return std::isfinite(v); };
  return std::isfinite(t_) && std::all_of(x_.begin(), x_.end(), finite) &&
         std::all_of(y_.begin(), y_.end(), finite);
}

JetTrajectory::JetTrajectory(double alpha, std::vector<SampledPath> base,
                             std::vector<std::vector<SampledPath>> jets)
    : alpha_(alpha), base_(std::move(base)), jets_(std::move(jets)) {
  if (base_.empty() || jets_.empty()) {
    throw DomainError("JetTrajectory: need at least one dimension and one jet level");
  }
  for (const auto& level : jets_) {
    if (level.size() != base_.size()) {
      throw DomainError("JetTrajectory: every jet level needs one path per dimension");
    }
    for (const auto& p : level) {
      if (!p.same_grid(base_.front())) {
        throw DomainError("JetTrajectory: all component paths must share one grid");
      }
    }
  }
  for (const auto& p : base_) {
    if (!p.same_grid(base_.front())) {
      throw DomainError("JetTrajectory: all component paths must share one grid");
    }
  }
}

const SampledPath& JetTrajectory::jet(int a, std::size_t i) const {
  if (a < 1 || a > order() || i >= dim()) {
    throw DomainError("JetTrajectory: jet index out of range");
  }
  return jets_[static_cast<std::size_t>(a - 1)][i];
}

JetPoint JetTrajectory::point(std::size_t node) const {
  JetPoint p(order(), dim());
  p.t() = t(node);
  for (std::size_t i = 0; i < dim(); ++i) {
    p.x(i) = base_[i][node];
    for (int a = 1; a <= order(); ++a) {
      p.y(a, i) = jets_[static_cast<std::size_t>(a - 1)][i][node];
    }
  }
  return p;
}

JetTrajectory lift(const std::vector<SampledPath>& paths, double alpha, int k) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("lift: alpha must lie in (0, 1)");
  }
  if (k < 1) {
    throw DomainError("lift: order k must be at least 1");
  }
  if (paths.empty()) {
    throw DomainError("lift: no paths given");
  }
  std::vector<std::vector<SampledPath>> jets;
  jets.reserve(static_cast<std::size_t>(k));
  for (int a = 1; a <= k; ++a) {
    const FracOrder order(alpha * a);
    const double scale = 1.0 / gamma(1.0 + order.mu());
    std::vector<SampledPath> level;
    for (const auto& x : paths) {
      auto d = frac_deriv(x, order, Side::left);
      for (auto& v : d.values()) {
        v *= scale;
      }
      level.push_back(std::move(d));
    }
    jets.push_back(std::move(level));
  }
  return JetTrajectory(alpha, paths, std::move(jets));
}

JetTrajectory lift(const SampledPath& path, double alpha, int k) {
  return lift(std::vector<SampledPath>{path}, alpha, k);
}

std::vector<double> taylor_reconstruct(const JetPoint& point, double alpha, double t_eval) {
  if (point.t() != 0.0) {
    throw DomainError("taylor_reconstruct: the jet point must sit at t = 0");
  }
  if (t_eval < 0.0) {
    throw DomainError("taylor_reconstruct: t_eval must be non-negative");
  }
  std::vector<double> out(point.dim());
  for (std::size_t i = 0; i < point.dim(); ++i) {
    double acc = point.x(i);
    for (int a = 1; a <= point.order(); ++a) {
      acc += std::pow(t_eval, alpha * a) * point.y(a, i);
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace fracjet
