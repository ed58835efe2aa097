#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fracjet/fracops.hpp"

namespace testsupport {

// Caputo/Riemann-Liouville power rule, D^mu t^p, evaluated with std::tgamma.
inline double power_rule(double p, double mu, double t) {
  const double arg = 1.0 + p - mu;
  if (arg <= 0.0 && arg == std::floor(arg)) return 0.0;
  return std::tgamma(1.0 + p) / std::tgamma(arg) * std::pow(t, p - mu);
}

// Mittag-Leffler series with std::tgamma; fine for moderate |z|.
inline double ml_reference(double alpha, double z) {
  double sum = 0.0;
  for (int k = 0; k < 300; ++k) {
    const double g = 1.0 + alpha * k;
    const double term = g > 170.0 ? std::exp(k * std::log(std::abs(z)) - std::lgamma(g)) *
                                        ((z < 0 && k % 2) ? -1.0 : 1.0)
                                  : std::pow(z, k) / std::tgamma(g);
    sum += term;
    if (k > 10 && std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// max |a - b| / max |b| over nodes [lo, hi].
inline double normwise_rel(const std::vector<double>& a, const std::vector<double>& b, std::size_t lo,
                           std::size_t hi) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = lo; j <= hi; ++j) {
    num = std::max(num, std::abs(a[j] - b[j]));
    den = std::max(den, std::abs(b[j]));
  }
  return num / den;
}

// max over nodes with t >= t_min of |a - exact| / |exact|.
inline double pointwise_rel(const fracjet::SampledPath& a, const std::function<double(double)>& exact,
                            double t_min) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.t(j) < t_min - 1e-12) continue;
    const double e = exact(a.t(j));
    m = std::max(m, std::abs(a[j] - e) / std::abs(e));
  }
  return m;
}

inline std::vector<double> to_vector(const fracjet::SampledPath& p) { return {p.values().begin(), p.values().end()}; }

inline std::vector<double> sample(const fracjet::SampledPath& grid, const std::function<double(double)>& f) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = f(grid.t(j));
  return out;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline double bump(double t, double center, double width) {
  const double r = (t - center) / width;
  return std::abs(r) < 1.0 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0;
}

}  // namespace testsupport
