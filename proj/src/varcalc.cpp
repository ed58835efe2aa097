#include "fracjet/varcalc.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fracjet/error.hpp"

namespace fracjet {
namespace {

constexpr double kFdRelStep = 1e-6;
constexpr double kFdAbsStep = 1e-8;
constexpr double kHessianStep = 1e-5;
constexpr double kHessianNestedStep = 1e-4;
constexpr double kRegularDet = 1e-10;
constexpr double kPartialCheckTol = 1e-6;
constexpr int kPartialCheckPoints = 100;

double fd_step(double v) { return std::max(kFdRelStep * std::abs(v), kFdAbsStep); }

template <typename F>
double central_difference(const F& f, JetPoint p, const Coord& c) {
  const double v = get_coordinate(p, c);
  const double step = fd_step(v);
  set_coordinate(p, c, v + step);
  const double up = f(p);
  set_coordinate(p, c, v - step);
  const double down = f(p);
  return (up - down) / (2.0 * step);
}

std::vector<Coord> all_coords(int k, std::size_t n) {
  std::vector<Coord> out{Coord::time()};
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Coord::position(i));
  }
  for (int a = 1; a <= k; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(Coord::jet(a, i));
    }
  }
  return out;
}

}  // namespace

double get_coordinate(const JetPoint& p, const Coord& c) {
  switch (c.kind) {
    case Coord::Kind::time:
      return p.t();
    case Coord::Kind::position:
      return p.x(c.index);
    case Coord::Kind::jet:
      return p.y(c.level, c.index);
  }
  return 0.0;
}

void set_coordinate(JetPoint& p, const Coord& c, double value) {
  switch (c.kind) {
    case Coord::Kind::time:
      p.t() = value;
      break;
    case Coord::Kind::position:
      p.x(c.index) = value;
      break;
    case Coord::Kind::jet:
      p.y(c.level, c.index) = value;
      break;
  }
}

Lagrangian::Lagrangian(int k, std::size_t n, double alpha, Eval eval, Partial partial)
    : k_(k), n_(n), alpha_(alpha), eval_(std::move(eval)), partial_(std::move(partial)) {
  if (k_ < 1 || n_ < 1) {
    throw DomainError("Lagrangian: order and dimension must be positive");
  }
  if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
    throw DomainError("Lagrangian: alpha must lie in (0, 1]");
  }
  if (!eval_) {
    throw DomainError("Lagrangian: missing evaluation function");
  }
  terminals_.assign(1 + n_ + static_cast<std::size_t>(k_) * n_, 0.0);
  if (partial_) {
    validate_partials();
  }
}

double Lagrangian::operator()(const JetPoint& p) const {
  const double v = eval_(p);
  if (!std::isfinite(v)) {
    throw NumericalError("Lagrangian: non-finite value at t = " + std::to_string(p.t()));
  }
  return v;
}

double Lagrangian::partial(const JetPoint& p, const Coord& c) const {
  if (partial_) {
    return partial_(p, c);
  }
  return central_difference([this](const JetPoint& q) { return (*this)(q); }, p, c);
}

std::size_t Lagrangian::slot(const Coord& c) const {
  switch (c.kind) {
    case Coord::Kind::time:
      return 0;
    case Coord::Kind::position:
      if (c.index >= n_) break;
      return 1 + c.index;
    case Coord::Kind::jet:
      if (c.level < 1 || c.level > k_ || c.index >= n_) break;
      return 1 + n_ + static_cast<std::size_t>(c.level - 1) * n_ + c.index;
  }
  throw DomainError("Lagrangian: coordinate out of range");
}

double Lagrangian::terminal(const Coord& c) const { return terminals_[slot(c)]; }

Lagrangian& Lagrangian::set_terminal(const Coord& c, double value) {
  terminals_[slot(c)] = value;
  return *this;
}

Lagrangian Lagrangian::scaled(double c) const {
  Partial partial;
  if (partial_) {
    partial = [p = partial_, c](const JetPoint& q, const Coord& co) { return c * p(q, co); };
  }
  Lagrangian out(k_, n_, alpha_, [e = eval_, c](const JetPoint& q) { return c * e(q); },
                 std::move(partial));
  out.terminals_ = terminals_;
  return out;
}

Lagrangian operator+(const Lagrangian& a, const Lagrangian& b) {
  if (a.k_ != b.k_ || a.n_ != b.n_ || a.alpha_ != b.alpha_) {
    throw DomainError("Lagrangian sum: order, dimension and alpha must agree");
  }
  Lagrangian::Partial partial;
  if (a.partial_ && b.partial_) {
    partial = [pa = a.partial_, pb = b.partial_](const JetPoint& q, const Coord& c) {
      return pa(q, c) + pb(q, c);
    };
  }
  Lagrangian out(a.k_, a.n_, a.alpha_,
                 [ea = a.eval_, eb = b.eval_](const JetPoint& q) { return ea(q) + eb(q); },
                 std::move(partial));
  out.terminals_ = a.terminals_;
  return out;
}

void Lagrangian::validate_partials() const {
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_real_distribution<double> coord_dist(0.1, 1.0);
  const auto coords = all_coords(k_, n_);
  for (int s = 0; s < kPartialCheckPoints; ++s) {
    JetPoint p(k_, n_);
    for (const auto& c : coords) {
      set_coordinate(p, c, coord_dist(rng));
    }
    for (const auto& c : coords) {
      const double analytic = partial_(p, c);
      const double numeric = central_difference([this](const JetPoint& q) { return (*this)(q); }, p, c);
      if (std::abs(analytic - numeric) > kPartialCheckTol * std::max(1.0, std::abs(numeric))) {
        throw DomainError("Lagrangian: analytic partial disagrees with finite differences (" +
                          std::to_string(analytic) + " vs " + std::to_string(numeric) + ")");
      }
    }
  }
}

double frac_partial(const std::function<double(const JetPoint&)>& f, const Coord& coord,
                    const JetPoint& point, double alpha, double terminal, const FracPartialOptions& opts) {
  if (alpha == 1.0) {
    return central_difference(f, point, coord);
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("frac_partial: alpha must lie in (0, 1]");
  }
  if (opts.nodes < 3 || !(opts.min_span > 0.0)) {
    throw DomainError("frac_partial: need at least 3 nodes and a positive minimum span");
  }
  const double value = get_coordinate(point, coord);
  if (value < terminal) {
    throw DomainError("frac_partial: coordinate value " + std::to_string(value) +
                      " lies below its lower terminal " + std::to_string(terminal));
  }
  JetPoint probe = point;
  auto sample = [&](double s) {
    set_coordinate(probe, coord, s);
    const double v = f(probe);
    if (!std::isfinite(v)) {
      throw NumericalError("frac_partial: function is not finite at coordinate value " + std::to_string(s));
    }
    return v;
  };

  const FracOrder order(alpha);
  const std::size_t n = opts.nodes;
  const double span = value - terminal;
  if (span >= opts.min_span) {
    const double h = span / static_cast<double>(n - 1);
    std::vector<double> vals(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      vals[j] = sample(terminal + static_cast<double>(j) * h);
    }
    vals[n - 1] = sample(value);
    return frac_deriv_last(vals, h, order);
  }

  const double h = opts.min_span / static_cast<double>(n - 1);
  std::vector<double> vals(n);
  for (std::size_t j = 0; j < n; ++j) {
    vals[j] = sample(terminal + static_cast<double>(j) * h);
  }
  const auto d = frac_deriv(SampledPath(terminal, h, std::move(vals)), order);
  const double pos = span / h;
  const auto j = std::min(static_cast<std::size_t>(pos), n - 2);
  const double frac = pos - static_cast<double>(j);
  return (1.0 - frac) * d[j] + frac * d[j + 1];
}

double frac_partial(const Lagrangian& L, const Coord& coord, const JetPoint& point, double alpha,
                    const FracPartialOptions& opts) {
  if (alpha == 1.0) {
    return L.partial(point, coord);
  }
  return frac_partial([&L](const JetPoint& q) { return L(q); }, coord, point, alpha, L.terminal(coord),
                      opts);
}

namespace {

void check_compatible(const Lagrangian& L, const JetTrajectory& traj, const char* who) {
  if (std::abs(traj.alpha() - L.alpha()) > 1e-12 || traj.order() != L.order() || traj.dim() != L.dim()) {
    throw DomainError(std::string(who) + ": trajectory (alpha, k, n) does not match the Lagrangian");
  }
}

}  // namespace

double action(const Lagrangian& L, const JetTrajectory& traj) {
  check_compatible(L, traj, "action");
  std::vector<double> integrand(traj.size());
  for (std::size_t j = 1; j < traj.size(); ++j) {
    integrand[j] = L(traj.point(j));
  }
  integrand[0] = integrand[1];
  return trapezoid(traj.grid().with_values(std::move(integrand)));
}

ELResidualReport el_residual(const Lagrangian& L, const JetTrajectory& traj, Variant variant) {
  check_compatible(L, traj, "el_residual");
  const int k = L.order();
  const double alpha = L.alpha();
  const FracOrder top(alpha * k);
  const std::size_t n_pts = traj.size();
  const auto margin = static_cast<std::size_t>(top.m()) + 1;
  if (n_pts < 2 * margin + 1) {
    throw DomainError("el_residual: grid too short for derivatives of order " + std::to_string(top.mu()));
  }

  std::vector<JetPoint> points;
  points.reserve(n_pts);
  for (std::size_t j = 0; j < n_pts; ++j) {
    points.push_back(traj.point(j));
  }

  auto sampled_partial = [&](const Coord& c) {
    std::vector<double> out(n_pts);
    for (std::size_t j = 0; j < n_pts; ++j) {
      try {
        out[j] = variant == Variant::classical ? L.partial(points[j], c)
                                               : frac_partial(L, c, points[j], alpha);
      } catch (const DomainError& e) {
        throw DomainError("el_residual: node " + std::to_string(j) + ": " + e.what());
      } catch (const Error& e) {
        throw NumericalError("el_residual: node " + std::to_string(j) + ": " + e.what());
      }
    }
    return traj.grid().with_values(std::move(out));
  };

  ELResidualReport report;
  report.variant = variant;
  report.first_interior = margin;
  report.last_interior = n_pts - 1 - margin;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    auto r = sampled_partial(Coord::position(i));
    for (int a = 1; a <= k; ++a) {
      const auto p = sampled_partial(Coord::jet(a, i));
      const auto d = frac_deriv(p, FracOrder(alpha * a), Side::left);
      const double sign = (a % 2 == 0) ? 1.0 : -1.0;
      for (std::size_t j = 0; j < n_pts; ++j) {
        r[j] += sign * d[j];
      }
    }
    for (std::size_t j = report.first_interior; j <= report.last_interior; ++j) {
      report.norm_inf = std::max(report.norm_inf, std::abs(r[j]));
    }
    report.residual.push_back(std::move(r));
  }
  return report;
}

namespace {

// Second differences of L carry rounding error ~ eps |L| / step^2; values at
// that level are indistinguishable from zero.
double below_noise(double value, double magnitude, double step2) {
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::max(magnitude, 1.0) / step2;
  return std::abs(value) <= noise ? 0.0 : value;
}

}  // namespace

HessianG hessian_g(const Lagrangian& L, const JetPoint& point, Variant variant) {
  const std::size_t n = L.dim();
  HessianG out;
  out.n = n;
  out.g.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Coord ci = Coord::jet(1, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Coord cj = Coord::jet(1, j);
      double gij = 0.0;
      if (variant == Variant::fractional) {
        auto inner = [&](const JetPoint& q) { return frac_partial(L, cj, q, L.alpha()); };
        gij = frac_partial(inner, ci, point, L.alpha(), L.terminal(ci));
      } else if (L.has_analytic_partials()) {
        JetPoint q = point;
        const double v = get_coordinate(point, ci);
        const double step = kHessianStep * std::max(1.0, std::abs(v));
        set_coordinate(q, ci, v + step);
        const double up = L.partial(q, cj);
        set_coordinate(q, ci, v - step);
        const double down = L.partial(q, cj);
        gij = (up - down) / (2.0 * step);
      } else {
        const double vi = get_coordinate(point, ci);
        const double si = kHessianNestedStep * std::max(1.0, std::abs(vi));
        JetPoint q = point;
        if (i == j) {
          set_coordinate(q, ci, vi + si);
          const double up = L(q);
          set_coordinate(q, ci, vi - si);
          const double down = L(q);
          const double mid = L(point);
          gij = (up - 2.0 * mid + down) / (si * si);
          gij = below_noise(gij, std::max({std::abs(up), std::abs(mid), std::abs(down)}), si * si);
        } else {
          const double vj = get_coordinate(point, cj);
          const double sj = kHessianNestedStep * std::max(1.0, std::abs(vj));
          auto at = [&](double di, double dj) {
            set_coordinate(q, ci, vi + di);
            set_coordinate(q, cj, vj + dj);
            return L(q);
          };
          const double pp = at(si, sj), pm = at(si, -sj), mp = at(-si, sj), mm = at(-si, -sj);
          gij = (pp - pm - mp + mm) / (4.0 * si * sj);
          gij = below_noise(gij, std::max({std::abs(pp), std::abs(pm), std::abs(mp), std::abs(mm)}), si * sj);
        }
      }
      out.g[i * n + j] = gij;
    }
  }
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> g(
      out.g.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  out.det = g.determinant();
  out.regular = std::abs(out.det) > kRegularDet;
  return out;
}

std::vector<double> el_explicit_rhs(const Lagrangian& L, const JetPoint& point, Variant hessian_variant) {
  if (L.order() != 1) {
    throw DomainError("el_explicit_rhs: only order-1 Lagrangians define an explicit field");
  }
  const auto hess = hessian_g(L, point, hessian_variant);
  if (!hess.regular) {
    throw NumericalError("el_explicit_rhs: singular Hessian (det = " + std::to_string(hess.det) + ")");
  }
  const std::size_t n = L.dim();
  const double alpha = L.alpha();
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Coord yk = Coord::jet(1, k);
    auto momentum = [&](const JetPoint& q) { return frac_partial(L, yk, q, alpha); };
    double total = frac_partial(momentum, Coord::time(), point, alpha, L.terminal(Coord::time()));
    for (std::size_t j = 0; j < n; ++j) {
      const Coord xj = Coord::position(j);
      total += point.y(1, j) * frac_partial(momentum, xj, point, alpha, L.terminal(xj));
    }
    rhs(static_cast<Eigen::Index>(k)) = frac_partial(L, Coord::position(k), point, alpha) - total;
  }
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> g(
      hess.g.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const Eigen::VectorXd m = g.partialPivLu().solve(rhs);
  return {m.data(), m.data() + m.size()};
}

}  // namespace fracjet
