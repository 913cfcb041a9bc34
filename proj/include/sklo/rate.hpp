#pragma once

#include <span>

// Legendre-transform machinery for the half-normal log-MGF
// lambda^2/2 + phi(lambda): the tilt lambda*(x), the rate mu*(x), the
// Laplace exponent R_c(x) = c x^2/2 - mu*(x), and the critical point
// (v*, alpha*) where R = R_{1/2} is maximized.

namespace sklo::rate {

// Left edge of the domain of mu*: E|N(0,1)| = sqrt(2/pi).
inline constexpr double kXMin = 0.79788456080286535588;

// Unique root lambda >= 0 of lambda + phi'(lambda) = x. Throws
// std::domain_error for x < sqrt(2/pi) - 1e-12.
double lambda_star(double x);

// mu*(x) = lambda*(x) x - lambda*(x)^2/2 - phi(lambda*(x)).
double mu_star(double x);

// R_c(x) = c x^2/2 - mu*(x) for c in [1/2, 1].
double R_c(double x, double c);

// R = R_{1/2}.
double R(double x);

struct CriticalConstants {
  double v_star;           // maximizer of R
  double alpha_star;       // R(v_star)
  double lambda_at_vstar;  // lambda*(v_star) = v_star / 2
  double exponent;         // alpha_star - log 2
};

// Computed once from the reduced stationarity equation f(l) = l Phi(l).
const CriticalConstants& critical_constants();

// (alpha* - R(x)) / (x - v*)^2; rejects |x - v*| < 1e-6 (removable 0/0).
double theta_ratio(double x);

struct DerivativeCheckReport {
  double min_derivative;
  double max_derivative;
  bool ok;  // all central differences inside [1 - 1e-3, 20 + 1e-3]
};

// Central finite differences of lambda* at step 1e-5 over the given grid.
DerivativeCheckReport lambda_star_derivative_check(std::span<const double> xs);

}  // namespace sklo::rate
