#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fracjet/fracops.hpp"
#include "fracjet/jet.hpp"

namespace fracjet {

/// Which calculus a residual or Hessian is built from: fractional partials
/// of order alpha in every coordinate, or ordinary partials.
enum class Variant { fractional, classical };

/// Selects one coordinate of a jet point: t, x^i, or y^{i(alpha a)}.
struct Coord {
  enum class Kind { time, position, jet };

  Kind kind = Kind::position;
  int level = 0;  // a, for jet coordinates
  std::size_t index = 0;

  static Coord time() { return {Kind::time, 0, 0}; }
  static Coord position(std::size_t i) { return {Kind::position, 0, i}; }
  static Coord jet(int a, std::size_t i) { return {Kind::jet, a, i}; }
};

double get_coordinate(const JetPoint& p, const Coord& c);
void set_coordinate(JetPoint& p, const Coord& c, double value);

/// A scalar function on the order-k fractional jet space of an
/// n-dimensional configuration space.
///
/// Analytic first partials are optional. When given they are checked at
/// construction against central differences at 100 pseudo-random points with
/// every coordinate drawn from [0.1, 1]; a relative mismatch above 1e-6
/// raises DomainError.
///
/// Each coordinate carries the lower terminal used by fractional partials in
/// that coordinate (0 unless overridden).
class Lagrangian {
 public:
  using Eval = std::function<double(const JetPoint&)>;
  using Partial = std::function<double(const JetPoint&, const Coord&)>;

  Lagrangian(int k, std::size_t n, double alpha, Eval eval, Partial partial = {});

  int order() const { return k_; }
  std::size_t dim() const { return n_; }
  double alpha() const { return alpha_; }
  bool has_analytic_partials() const { return static_cast<bool>(partial_); }

  /// Evaluates L; throws NumericalError on a non-finite value.
  double operator()(const JetPoint& p) const;

  /// Ordinary partial derivative: analytic when available, otherwise a
  /// central difference with step max(1e-6 |v|, 1e-8).
  double partial(const JetPoint& p, const Coord& c) const;

  double terminal(const Coord& c) const;
  Lagrangian& set_terminal(const Coord& c, double value);

  Lagrangian scaled(double c) const;
  friend Lagrangian operator+(const Lagrangian& a, const Lagrangian& b);

 private:
  std::size_t slot(const Coord& c) const;
  void validate_partials() const;

  int k_;
  std::size_t n_;
  double alpha_;
  Eval eval_;
  Partial partial_;
  std::vector<double> terminals_;
};

struct FracPartialOptions {
  std::size_t nodes = 513;
  double min_span = 1e-3;
};

/// Fractional partial of order alpha of L in one coordinate (lower terminal
/// taken from L): s -> L(..., s, ...) is sampled from the terminal to the
/// current value and differentiated with frac_deriv. When the span is below
/// min_span the grid covers [a, a + min_span] and the result is interpolated
/// at the current value. alpha == 1 returns the ordinary partial.
double frac_partial(const Lagrangian& L, const Coord& coord, const JetPoint& point, double alpha,
                    const FracPartialOptions& opts = {});

/// Same operator for an arbitrary function on jet space.
double frac_partial(const std::function<double(const JetPoint&)>& f, const Coord& coord,
                    const JetPoint& point, double alpha, double terminal,
                    const FracPartialOptions& opts = {});

/// Trapezoid integral of L along the lifted trajectory. The integrand at the
/// base node is replaced by its value at the first interior node.
double action(const Lagrangian& L, const JetTrajectory& traj);

struct ELResidualReport {
  std::vector<SampledPath> residual;  // one per dimension
  double norm_inf = 0.0;              // over interior nodes only
  Variant variant = Variant::classical;
  std::size_t first_interior = 0;
  std::size_t last_interior = 0;
};

/// Euler-Lagrange residual along a lifted trajectory:
///   r_i = P_i + sum_{a=1..k} (-1)^a D_t^(alpha a)[p_{i,a}]
/// where P_i, p_{i,a} are the partials of L in x^i and y^{i(alpha a)}
/// (fractional of order alpha or ordinary, per variant) composed with the
/// trajectory, and D_t is applied to the sampled composite. The first and
/// last ceil(alpha k) + 1 nodes are excluded from norm_inf.
ELResidualReport el_residual(const Lagrangian& L, const JetTrajectory& traj, Variant variant);

struct HessianG {
  std::size_t n = 0;
  std::vector<double> g;  // row-major n x n
  double det = 0.0;
  bool regular = false;  // |det| > 1e-10

  double operator()(std::size_t i, std::size_t j) const { return g[i * n + j]; }
};

/// Second partials of L in the first-level jet coordinates y^{i(alpha)}.
/// Classical: central differences (of the analytic gradient when present).
/// Fractional: nested fractional partials of order alpha.
HessianG hessian_g(const Lagrangian& L, const JetPoint& point, Variant variant = Variant::classical);

/// Right-hand side M of the explicit field of a regular order-1 Lagrangian:
///   M^i = g^{ik} (D^alpha_{x^k} L - d_t^alpha (D^alpha_{y^k} L)),
///   d_t^alpha = D^alpha_t + y^j D^alpha_{x^j},
/// with every D^alpha a fractional partial. The Hessian variant selects how
/// g is formed. Throws NumericalError when g is singular.
std::vector<double> el_explicit_rhs(const Lagrangian& L, const JetPoint& point,
                                    Variant hessian_variant = Variant::classical);

}  // namespace fracjet
