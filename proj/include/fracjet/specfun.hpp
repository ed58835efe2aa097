#pragma once

#include <cstddef>

namespace fracjet {

/// Gamma function. Lanczos approximation (g = 7, 9 terms) for x >= 0.5 and
/// the reflection formula below that. Relative error is around 1e-15 on
/// [0.1, 30]. Throws DomainError at 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma(double x);

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!,
/// evaluated by the running product so integer alpha < k gives an exact 0.
double gen_binomial(double alpha, std::size_t k);

/// Parameters of the one-parameter Mittag-Leffler series.
struct MLParams {
  double alpha = 1.0;
  double tol = 1e-14;  // relative truncation tolerance
  std::size_t max_terms = 10'000;

  void validate() const;
};

/// Largest |z| accepted by mittag_leffler. Beyond it the alternating series
/// loses all significant digits to cancellation.
inline constexpr double kMittagLefflerMaxArg = 50.0;

/// E_alpha(z) = sum_{a>=0} z^a / Gamma(1 + alpha a).
///
/// The series is summed with an incremental gamma ratio and truncated once
/// the terms are decreasing and the current one is below tol * |sum|. To
/// evaluate the t^(alpha a) form pass z = t^alpha.
///
/// Throws DomainError for |z| > kMittagLefflerMaxArg and NumericalError when
/// max_terms is reached first.
double mittag_leffler(const MLParams& params, double z);

}  // namespace fracjet
