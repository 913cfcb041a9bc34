#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Analytic and Monte Carlo estimators for the local-optima landscape: the
// exact local-optimality probability via a one-dimensional orthant
// reduction, half-normal sum densities by log-space grid convolution,
// exponential moments, large-deviation tails, and the conditional energy law.

namespace sklo::est {

enum class Method {
  OrthantQuadrature,
  Convolution,
  TiltedMc,
  NaiveMc,
  BruteForce,
};

std::string method_name(Method m);

struct EstimateWithError {
  double value = 0.0;      // exp(log_value) when representable
  double log_value = 0.0;  // natural log; primary field for tiny/huge scales
  Method method = Method::OrthantQuadrature;
  double error = 0.0;      // quadrature bound or MC standard error (of the log)
  std::uint64_t n_samples = 0;
};

// Tabulated density of S = |N_1| + ... + |N_n| on a uniform grid starting
// at 0; stored as log density point values (-inf where the density is 0).
struct GridDensity {
  std::size_t n = 0;
  double grid_start = 0.0;
  double grid_step = 0.0;
  std::vector<double> log_density;
};

double default_grid_step(std::size_t n);

// Repeated-doubling log-space convolution of the half-normal density over
// [0, n sqrt(2/pi) + 12 sqrt(n)]. Rejects grids longer than 2^26 points.
GridDensity halfnormal_sum_density(std::size_t n, double grid_step);

// P{sigma locally optimal} = int f(g) Phi(g / sqrt(n-2))^n dg by adaptive
// quadrature with a log-space integrand; n = 2 is the closed form 1/2.
EstimateWithError local_opt_probability(std::size_t n);

// log E exp(||N||_1^2 / (4(n-1))) from the grid density.
EstimateWithError exp_moment_convolution(std::size_t n);

// Same moment by exponentially tilted Monte Carlo with tilt v*/2.
EstimateWithError exp_moment_tilted_mc(std::size_t n, std::uint64_t samples,
                                       std::uint64_t seed);

struct TailReport {
  EstimateWithError log_tail;  // log P{||N||_1 >= n x}
  double mu_star = 0.0;
  double r_n = 0.0;  // -log_tail / n - mu_star; Chernoff forces r_n >= 0
};

TailReport tail_probability(std::size_t n, double x);

enum class Side { Below, Above };

// log E[exp(||N||_1^2 / (4(n-1))) 1{S <= bound}] (or >=); `bound` is in
// units of s = ||N||_1.
EstimateWithError truncated_exp_moment(std::size_t n, double bound, Side side);

// P{-H(sigma)/n^{3/2} >= delta | sigma locally optimal}: the ratio of the
// truncated to the full exponential moment, threshold 2 delta n^{3/2}/sqrt(n-2).
EstimateWithError conditional_energy_tail(std::size_t n, double delta);

// E[-H/n^{3/2} | locally optimal]; approaches v*/2 as n grows.
EstimateWithError conditional_energy_mean(std::size_t n);

struct CountReport {
  double log_count = 0.0;          // log E[#local optima] = n log 2 + log P
  double exponent_residual = 0.0;  // log_count / n - alpha*
};

CountReport expected_count(std::size_t n);

// Fraction of sampled instances for which the all-ones configuration is
// locally optimal, with binomial standard error. Deterministic for any
// thread count.
EstimateWithError mc_local_opt_probability(std::size_t n, std::uint64_t samples,
                                           std::uint64_t seed, int threads = 0);

}  // namespace sklo::est
