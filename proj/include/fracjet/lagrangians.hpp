#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracjet/varcalc.hpp"

namespace fracjet {

/// Coefficient convention for the built-in Lagrangians.
///
/// `paper` carries the Gamma factors Gamma(1 + 2 j alpha) on the squared
/// level-j jet terms as originally published. With jet coordinates scaled by
/// 1 / Gamma(1 + j alpha), those factors leave a spurious
/// Gamma(1 + 2 j alpha) / Gamma(1 + j alpha) in front of each derivative of
/// the Euler-Lagrange equation. `normalized` uses Gamma(1 + j alpha) instead,
/// which makes the classical residual reproduce the target equation exactly.
enum class CoefficientSet { paper, normalized };

using TimeFunction = std::function<double(double)>;

/// A potential U(t, x) together with dU/dx.
struct Potential {
  std::function<double(double, double)> value;
  std::function<double(double, double)> dx;
};

/// U = b x^2 / 2.
Potential quadratic_potential(double b);

/// Bagley-Torvik Lagrangian on the order-4 jet space with base order alpha:
///   c x^2 / 2 - f(t) x - (b/2) G3 (y^{(3 alpha)})^2 + (a/2) G4 (y^{(4 alpha)})^2.
/// Its classical residual is a D^(8 alpha) x + b D^(6 alpha) x + c x - f for
/// the normalized set; alpha = 1/4 gives orders 2 and 3/2.
Lagrangian bagley_torvik_lagrangian(double a, double b, double c, TimeFunction f,
                                    CoefficientSet set = CoefficientSet::normalized, double alpha = 0.25);

/// The four terms above as separate Lagrangians, in the order
/// {c x^2/2, -f x, level-3 term, level-4 term}.
std::vector<Lagrangian> bagley_torvik_terms(double a, double b, double c, TimeFunction f,
                                            CoefficientSet set = CoefficientSet::normalized,
                                            double alpha = 0.25);

/// U(t, x) - (1/2) G1 (y^{(alpha)})^2; residual V + D^(2 alpha) x.
Lagrangian order1_potential_lagrangian(double alpha, const Potential& U,
                                       CoefficientSet set = CoefficientSet::normalized);

/// U - (a1/2) G1 (y^{(alpha)})^2 + (1/2) G2 (y^{(2 alpha)})^2;
/// residual V + a1 D^(2 alpha) x + D^(4 alpha) x.
Lagrangian order2_potential_lagrangian(double alpha, double a1, const Potential& U,
                                       CoefficientSet set = CoefficientSet::normalized);

/// U - (a1/2) G1 (y^{(alpha)})^2 + (a2/2) G2 (y^{(2 alpha)})^2 - (1/2) G3 (y^{(3 alpha)})^2;
/// residual V + a1 D^(2 alpha) x + a2 D^(4 alpha) x + D^(6 alpha) x.
Lagrangian order3_potential_lagrangian(double alpha, double a1, double a2, const Potential& U,
                                       CoefficientSet set = CoefficientSet::normalized);

/// Lagrangian whose classical residual is
///   c' f(t) x^(gamma - alpha) + a1 D^(2 alpha) x + a2 D^(3 alpha) x,
///   c' = c Gamma(1 + gamma) / Gamma(1 + gamma - alpha).
///
/// normalized: an order-3 family member on the jet space of base order
/// alpha / 2 (so its level-2 and level-3 coordinates carry orders alpha and
/// 3 alpha / 2 of the half-order jet):
///   c' f x^(1+gamma-alpha) / (1+gamma-alpha)
///     + (a1/2) Gamma(1+alpha) (y^{(2)})^2 - (a2/2) Gamma(1+3alpha/2) (y^{(3)})^2.
/// paper: the published form on the order-2 jet space of base order alpha,
///   c Gamma(1+gamma) x^(gamma-alpha+1) f / Gamma(1+gamma-alpha)^(1+gamma-alpha)
///     - (a1/2) Gamma(1+2alpha) (y^{(alpha)})^2 + (a2/2) Gamma(1+3alpha) (y^{(2alpha)})^2.
/// Requires x > 0 along trajectories when gamma - alpha is not an integer.
Lagrangian power_forcing_lagrangian(double alpha, double c, double gamma, double a1, double a2, TimeFunction f,
                                    CoefficientSet set = CoefficientSet::normalized);

/// The published companion written for the fractional variant:
///   c/(1+gamma-alpha) x^gamma - a1 Gamma(1+2alpha) (y^{(alpha)})^alpha + a2 Gamma(1+3alpha) (y^{(2alpha)})^alpha.
/// Shipped verbatim; defined for non-negative jet coordinates only.
Lagrangian power_forcing_fractional_form(double alpha, double c, double gamma, double a1, double a2);

/// Parameters for catalog lookup. Missing coefficients take their defaults
/// (a = b = c = 1, a1 = a2 = 1, gamma = 2); alpha defaults per entry.
struct LagrangianSpec {
  std::map<std::string, double> coeffs;
  TimeFunction forcing;          // defaults to f == 0 (f == 1 for eq66-example)
  std::optional<Potential> potential;  // defaults to quadratic_potential(coeffs["b"] or 1)
  std::optional<double> alpha;
  CoefficientSet set = CoefficientSet::normalized;
};

/// Catalog names: bagley-torvik, order1-potential, order2-potential,
/// order3-potential, eq66-example. Throws DomainError for unknown names.
Lagrangian make_lagrangian(std::string_view name, const LagrangianSpec& spec);
std::vector<std::string> lagrangian_names();

}  // namespace fracjet
