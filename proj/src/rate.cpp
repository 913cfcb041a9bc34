#include "sklo/rate.hpp"

#include <cmath>
#include <stdexcept>

#include "sklo/gaussian.hpp"

namespace sklo::rate {

namespace {

// Safeguarded Newton on a monotone function: falls back to bisection when a
// Newton step leaves the bracket.
template <typename F, typename DF>
double monotone_root(F f, DF df, double lo, double hi, double guess,
                     double residual_tol) {
  double x = std::min(std::max(guess, lo), hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = f(x);
    if (std::abs(fx) <= residual_tol) return x;
    if (fx > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double d = df(x);
    double next = x - fx / d;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    x = next;
  }
  return x;
}

}  // namespace

double lambda_star(double x) {
  if (x < kXMin - 1e-12) {
    throw std::domain_error("lambda_star: x below sqrt(2/pi)");
  }
  if (x <= kXMin) return 0.0;
  // lambda + phi'(lambda) is increasing with derivative in [0.05, 1] and
  // equals phi'(0) = sqrt(2/pi) at 0, so [0, x] brackets the root.
  auto f = [x](double l) { return l + gauss::phi_prime(l) - x; };
  auto df = [](double l) { return 1.0 + gauss::phi_double_prime(l); };
  return monotone_root(f, df, 0.0, x, std::max(0.0, x - kXMin), 1e-13);
}

double mu_star(double x) {
  const double l = lambda_star(x);
  const double v = l * x - 0.5 * l * l - gauss::phi(l);
  return v < 0.0 ? 0.0 : v;
}

double R_c(double x, double c) {
  if (x < kXMin - 1e-12) {
    throw std::domain_error("R_c: x below sqrt(2/pi)");
  }
  if (!(c >= 0.5 && c <= 1.0)) {
    throw std::domain_error("R_c: c must lie in [1/2, 1]");
  }
  return 0.5 * c * x * x - mu_star(x);
}

double R(double x) { return R_c(x, 0.5); }

const CriticalConstants& critical_constants() {
  static const CriticalConstants cc = [] {
    // Stationarity of R reduces to f(l) = l Phi(l) at l = v*/2; the gap
    // f(l) - l Phi(l) is strictly decreasing, with a sign change in [0.3, 0.8].
    auto f = [](double l) { return l * gauss::cdf(l) - gauss::pdf(l); };
    auto df = [](double l) { return gauss::cdf(l) + 2.0 * l * gauss::pdf(l); };
    const double l = monotone_root(f, df, 0.3, 0.8, 0.5, 1e-14);
    CriticalConstants out{};
    out.lambda_at_vstar = l;
    out.v_star = 2.0 * l;
    out.alpha_star = R(out.v_star);
    out.exponent = out.alpha_star - 0.69314718055994530942;
    return out;
  }();
  return cc;
}

double theta_ratio(double x) {
  if (x < kXMin - 1e-12) {
    throw std::domain_error("theta_ratio: x below sqrt(2/pi)");
  }
  const auto& cc = critical_constants();
  const double d = x - cc.v_star;
  if (std::abs(d) < 1e-6) {
    throw std::domain_error("theta_ratio: x too close to v_star");
  }
  return (cc.alpha_star - R(x)) / (d * d);
}

DerivativeCheckReport lambda_star_derivative_check(std::span<const double> xs) {
  const double h = 1e-5;
  DerivativeCheckReport rep{1e300, -1e300, true};
  for (const double x : xs) {
    if (x < kXMin + h) {
      throw std::domain_error("lambda_star_derivative_check: grid point too close to domain edge");
    }
    const double d = (lambda_star(x + h) - lambda_star(x - h)) / (2.0 * h);
    rep.min_derivative = std::min(rep.min_derivative, d);
    rep.max_derivative = std::max(rep.max_derivative, d);
  }
  rep.ok = rep.min_derivative >= 1.0 - 1e-3 && rep.max_derivative <= 20.0 + 1e-3;
  return rep;
}

}  // namespace sklo::rate
