#include "fracjet/lagrangians.hpp"

#include <cmath>
#include <string>

#include "fracjet/error.hpp"
#include "fracjet/specfun.hpp"

namespace fracjet {
namespace {

// One additive piece of a built-in Lagrangian (n = 1).
struct Term {
  Lagrangian::Eval value;
  Lagrangian::Partial partial;
};

double time_derivative(const TimeFunction& f, double t) {
  const double step = std::max(1e-6 * std::abs(t), 1e-6);
  return (f(t + step) - f(t - step)) / (2.0 * step);
}

Lagrangian assemble(int k, double alpha, const std::vector<Term>& terms) {
  auto eval = [terms](const JetPoint& p) {
    double acc = 0.0;
    for (const auto& t : terms) acc += t.value(p);
    return acc;
  };
  auto partial = [terms](const JetPoint& p, const Coord& c) {
    double acc = 0.0;
    for (const auto& t : terms) acc += t.partial(p, c);
    return acc;
  };
  return Lagrangian(k, 1, alpha, eval, partial);
}

// weight/2 * (y^{(level)})^2
Term squared_jet(int level, double weight) {
  return {[level, weight](const JetPoint& p) { return 0.5 * weight * p.y(level, 0) * p.y(level, 0); },
          [level, weight](const JetPoint& p, const Coord& c) {
            return (c.kind == Coord::Kind::jet && c.level == level) ? weight * p.y(level, 0) : 0.0;
          }};
}

// weight * (y^{(level)})^power
Term power_jet(int level, double weight, double power) {
  return {[=](const JetPoint& p) { return weight * std::pow(p.y(level, 0), power); },
          [=](const JetPoint& p, const Coord& c) {
            return (c.kind == Coord::Kind::jet && c.level == level)
                       ? weight * power * std::pow(p.y(level, 0), power - 1.0)
                       : 0.0;
          }};
}

// weight * f(t) * x^power (f == 1 when empty)
Term forced_power(double weight, double power, TimeFunction f) {
  if (!f) {
    f = [](double) { return 1.0; };
  }
  return {[=](const JetPoint& p) { return weight * f(p.t()) * std::pow(p.x(0), power); },
          [=](const JetPoint& p, const Coord& c) {
            switch (c.kind) {
              case Coord::Kind::position:
                return weight * f(p.t()) * power * std::pow(p.x(0), power - 1.0);
              case Coord::Kind::time:
                return weight * time_derivative(f, p.t()) * std::pow(p.x(0), power);
              default:
                return 0.0;
            }
          }};
}

Term potential_term(const Potential& U) {
  return {[U](const JetPoint& p) { return U.value(p.t(), p.x(0)); },
          [U](const JetPoint& p, const Coord& c) {
            switch (c.kind) {
              case Coord::Kind::position:
                return U.dx(p.t(), p.x(0));
              case Coord::Kind::time:
                return time_derivative([&](double t) { return U.value(t, p.x(0)); }, p.t());
              default:
                return 0.0;
            }
          }};
}

// Gamma factor on the squared level-j jet term.
double jet_gamma(int level, double alpha, CoefficientSet set) {
  const double factor = set == CoefficientSet::paper ? 2.0 : 1.0;
  return gamma(1.0 + factor * level * alpha);
}

std::vector<Term> bagley_torvik_pieces(double a, double b, double c, const TimeFunction& f, CoefficientSet set,
                                       double alpha) {
  TimeFunction forcing = f ? f : [](double) { return 0.0; };
  return {forced_power(0.5 * c, 2.0, {}),
          forced_power(-1.0, 1.0, [forcing](double t) { return forcing(t); }),
          squared_jet(3, -b * jet_gamma(3, alpha, set)),
          squared_jet(4, a * jet_gamma(4, alpha, set))};
}

double coeff(const LagrangianSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.coeffs.find(key);
  return it == spec.coeffs.end() ? fallback : it->second;
}

}  // namespace

Potential quadratic_potential(double b) {
  return {[b](double, double x) { return 0.5 * b * x * x; }, [b](double, double x) { return b * x; }};
}

Lagrangian bagley_torvik_lagrangian(double a, double b, double c, TimeFunction f, CoefficientSet set,
                                    double alpha) {
  return assemble(4, alpha, bagley_torvik_pieces(a, b, c, f, set, alpha));
}

std::vector<Lagrangian> bagley_torvik_terms(double a, double b, double c, TimeFunction f, CoefficientSet set,
                                            double alpha) {
  std::vector<Lagrangian> out;
  for (const auto& term : bagley_torvik_pieces(a, b, c, f, set, alpha)) {
    out.push_back(assemble(4, alpha, {term}));
  }
  return out;
}

Lagrangian order1_potential_lagrangian(double alpha, const Potential& U, CoefficientSet set) {
  return assemble(1, alpha, {potential_term(U), squared_jet(1, -jet_gamma(1, alpha, set))});
}

Lagrangian order2_potential_lagrangian(double alpha, double a1, const Potential& U, CoefficientSet set) {
  return assemble(2, alpha,
                  {potential_term(U), squared_jet(1, -a1 * jet_gamma(1, alpha, set)),
                   squared_jet(2, jet_gamma(2, alpha, set))});
}

Lagrangian order3_potential_lagrangian(double alpha, double a1, double a2, const Potential& U,
                                       CoefficientSet set) {
  return assemble(3, alpha,
                  {potential_term(U), squared_jet(1, -a1 * jet_gamma(1, alpha, set)),
                   squared_jet(2, a2 * jet_gamma(2, alpha, set)), squared_jet(3, -jet_gamma(3, alpha, set))});
}

Lagrangian power_forcing_lagrangian(double alpha, double c, double gamma_exp, double a1, double a2,
                                    TimeFunction f, CoefficientSet set) {
  const double expo = 1.0 + gamma_exp - alpha;
  if (set == CoefficientSet::normalized) {
    const double c_prime = c * gamma(1.0 + gamma_exp) / gamma(1.0 + gamma_exp - alpha);
    const double beta = 0.5 * alpha;
    return assemble(3, beta,
                    {forced_power(c_prime / expo, expo, std::move(f)), squared_jet(2, a1 * gamma(1.0 + 2.0 * beta)),
                     squared_jet(3, -a2 * gamma(1.0 + 3.0 * beta))});
  }
  const double lead = c * gamma(1.0 + gamma_exp) / std::pow(gamma(1.0 + gamma_exp - alpha), expo);
  return assemble(2, alpha,
                  {forced_power(lead, expo, std::move(f)), squared_jet(1, -a1 * gamma(1.0 + 2.0 * alpha)),
                   squared_jet(2, a2 * gamma(1.0 + 3.0 * alpha))});
}

Lagrangian power_forcing_fractional_form(double alpha, double c, double gamma_exp, double a1, double a2) {
  return assemble(2, alpha,
                  {forced_power(c / (1.0 + gamma_exp - alpha), gamma_exp, {}),
                   power_jet(1, -a1 * gamma(1.0 + 2.0 * alpha), alpha),
                   power_jet(2, a2 * gamma(1.0 + 3.0 * alpha), alpha)});
}

Lagrangian make_lagrangian(std::string_view name, const LagrangianSpec& spec) {
  const Potential U = spec.potential ? *spec.potential : quadratic_potential(coeff(spec, "b", 1.0));
  if (name == "bagley-torvik") {
    return bagley_torvik_lagrangian(coeff(spec, "a", 1.0), coeff(spec, "b", 1.0), coeff(spec, "c", 1.0),
                                    spec.forcing, spec.set, spec.alpha.value_or(0.25));
  }
  if (name == "order1-potential") {
    return order1_potential_lagrangian(spec.alpha.value_or(0.5), U, spec.set);
  }
  if (name == "order2-potential") {
    return order2_potential_lagrangian(spec.alpha.value_or(0.5), coeff(spec, "a1", 1.0), U, spec.set);
  }
  if (name == "order3-potential") {
    return order3_potential_lagrangian(spec.alpha.value_or(0.5), coeff(spec, "a1", 1.0), coeff(spec, "a2", 1.0),
                                       U, spec.set);
  }
  if (name == "eq66-example") {
    return power_forcing_lagrangian(spec.alpha.value_or(0.5), coeff(spec, "c", 1.0), coeff(spec, "gamma", 2.0),
                                    coeff(spec, "a1", 1.0), coeff(spec, "a2", 1.0), spec.forcing, spec.set);
  }
  throw DomainError("unknown Lagrangian '" + std::string(name) + "'");
}

std::vector<std::string> lagrangian_names() {
  return {"bagley-torvik", "order1-potential", "order2-potential", "order3-potential", "eq66-example"};
}

}  // namespace fracjet
