#include "fracjet/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fracjet/error.hpp"

namespace fracjet {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_series(double z) {
  double acc = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    acc += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  return acc;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Gamma(1 + alpha (a-1)) / Gamma(1 + alpha a), the factor linking
// consecutive Mittag-Leffler terms.
double ml_gamma_ratio(double alpha, std::size_t a) {
  const double lo = 1.0 + alpha * static_cast<double>(a - 1);
  const double hi = 1.0 + alpha * static_cast<double>(a);
  if (hi < 160.0) {
    return gamma(lo) / gamma(hi);
  }
  return std::exp(log_gamma(lo) - log_gamma(hi));
}

}  // namespace

double gamma(double x) {
  if (std::isnan(x)) {
    return x;
  }
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma: pole at x = " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so t^(z+1/2) does not overflow before exp(-t) kicks in.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) *
         lanczos_series(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_series(z));
}

double gen_binomial(double alpha, std::size_t k) {
  double prod = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    prod *= (alpha - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return prod;
}

void MLParams::validate() const {
  if (!(alpha > 0.0)) {
    throw DomainError("Mittag-Leffler: alpha must be positive");
  }
  if (!(tol > 0.0 && tol < 1.0)) {
    throw DomainError("Mittag-Leffler: tol must lie in (0, 1)");
  }
  if (max_terms < 1) {
    throw DomainError("Mittag-Leffler: max_terms must be at least 1");
  }
}

double mittag_leffler(const MLParams& params, double z) {
  params.validate();
  if (!(std::abs(z) <= kMittagLefflerMaxArg)) {
    throw DomainError("Mittag-Leffler: |z| exceeds the series budget of " +
                      std::to_string(kMittagLefflerMaxArg));
  }
  if (z == 0.0) {
    return 1.0;
  }
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t a = 1; a < params.max_terms; ++a) {
    const double next = term * z * ml_gamma_ratio(params.alpha, a);
    sum += next;
    const bool decreasing = std::abs(next) < std::abs(term);
    term = next;
    if (decreasing && std::abs(term) <= params.tol * std::abs(sum)) {
      return sum;
    }
  }
  throw NumericalError("Mittag-Leffler: series did not converge within " +
                       std::to_string(params.max_terms) + " terms");
}

}  // namespace fracjet
