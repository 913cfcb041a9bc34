#pragma once

// Scalar Gaussian primitives: density, CDF with a log-space tail companion,
// phi(lambda) = log(2 Phi(lambda)) and its first two derivatives, and the
// half-normal moment generating function. All pure functions.

namespace sklo::gauss {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kSqrt2OverPi = 0.79788456080286535588;
inline constexpr double kLog2Pi = 1.8378770664093454836;

double pdf(double x);
double cdf(double x);
double log_pdf(double x);

// log Phi(x), accurate for arbitrarily negative x (Mills-ratio continued
// fraction below x = -8, where erfc-based evaluation starts losing digits
// downstream of an n * log Phi amplification).
double log_cdf(double x);

double phi(double lambda);
double phi_prime(double lambda);
double phi_double_prime(double lambda);

// E exp(lambda |N(0,1)|) = exp(lambda^2/2 + phi(lambda)).
double halfnormal_mgf(double lambda);
double halfnormal_log_mgf(double lambda);

struct AppendixBoundReport {
  double sup_value = 0.0;
  bool holds = false;
  double grid_step = 0.0;
};

// Grid supremum of g(lambda) = (f/Phi)(lambda) (lambda + (f/Phi)(lambda))
// over [0, 50] plus the closed-form domination 2*lambda*f + 2*f^2 beyond;
// holds iff everything stays below 0.95, i.e. phi'' > -0.95.
AppendixBoundReport verify_appendix_bound(double grid_step);

}  // namespace sklo::gauss
