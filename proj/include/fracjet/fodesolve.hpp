#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fracjet/fracops.hpp"

namespace fracjet {

struct FdeTerm {
  double coefficient;
  FracOrder order;
};

/// sum_j c_j D^(mu_j) x + c0 x = f(t) on [0, T] with zero initial state.
struct MultiTermFDE {
  std::vector<FdeTerm> terms;
  double zero_order_coeff = 0.0;
  std::function<double(double)> forcing;
  double T = 1.0;

  /// Throws DomainError unless the orders are distinct, at least one term is
  /// present, the leading coefficient is non-zero and T > 0.
  void validate() const;
  /// Terms sorted by descending order.
  std::vector<FdeTerm> sorted_terms() const;
  double max_order() const;
};

/// D^(2 alpha) x = F(t, x, D^alpha x) with x(0) = x0, D^alpha x(0) = v0,
/// solved as the pair D^alpha x = v, D^alpha v = F. alpha = 1 gives the
/// classical second-order equation.
struct FODE2 {
  double alpha = 0.5;
  std::function<double(double, double, double)> rhs;
  double x0 = 0.0;
  double v0 = 0.0;
  double T = 1.0;
};

struct SolveReport {
  SampledPath solution;
  std::optional<SampledPath> velocity;  // D^alpha x, FODE2 only
  double max_defect = 0.0;              // residual of the discrete scheme
  std::size_t steps = 0;
};

/// Implicit Grunwald-Letnikov stepping. At node j the scalar equation
///   sum_terms c h^-mu sum_{k<=j} w_k x_{j-k} + c0 x_j = f(t_j)
/// is solved for x_j, with x_0 = 0. Requires T/h to be an integer >= 8.
/// Throws NumericalError if the diagonal sum_terms c h^-mu + c0 vanishes.
SolveReport solve_multiterm(const MultiTermFDE& fde, double h);

/// Explicit Grunwald-Letnikov stepping of the pair (x, v); the history sums
/// run over earlier nodes, the right-hand sides are taken at the previous
/// node and the initial values enter through the base subtraction. Aborts
/// with NumericalError once |x| exceeds 1e12.
SolveReport solve_fode2(const FODE2& f, double h);

/// Pointwise sum c D^mu x + c0 x - f via frac_deriv. Nodes within
/// ceil(mu_max) + 1 of either end are set to zero.
SampledPath fde_residual(const MultiTermFDE& fde, const SampledPath& path);

/// Nodes excluded at each end of the grid by residual and error norms for a
/// derivative of the given maximum order (startup error of the scheme).
std::size_t interior_margin(double max_order);

/// The pair form of a multi-term equation whose orders are {2 beta, beta} or
/// {2 beta}; empty otherwise. The zero-order and forcing terms move to F.
std::optional<FODE2> as_fode2(const MultiTermFDE& fde, double x0 = 0.0, double v0 = 0.0);

}  // namespace fracjet
