#pragma once

// Independent numeric oracles used by the tests only. Deliberately simple
// methods (adaptive Simpson, series erf, naive summation, bisection) so the
// checks do not share code paths with the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "sklo/sk_model.hpp"

namespace oracles {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b) {
  const double c = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

inline double adaptive_simpson_impl(const std::function<double(double)>& f,
                                    double a, double b, double whole,
                                    double tol, int depth) {
  const double c = 0.5 * (a + b);
  const double left = simpson(f, a, c);
  const double right = simpson(f, c, b);
  if (depth > 50 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson_impl(f, a, c, left, 0.5 * tol, depth + 1) +
         adaptive_simpson_impl(f, c, b, right, 0.5 * tol, depth + 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12) {
  return adaptive_simpson_impl(f, a, b, simpson(f, a, b), tol, 0);
}

// erf via its Taylor series; adequate for |x| <= 4 at ~1e-15.
inline double erf_series(double x) {
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / static_cast<double>(k);
    const double add = term / static_cast<double>(2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum * 1.1283791670955125739;  // 2/sqrt(pi)
}

inline double normal_cdf_series(double x) {
  return 0.5 * (1.0 + erf_series(x * 0.70710678118654752440));
}

inline double normal_pdf(double x) {
  return 0.39894228040143267794 * std::exp(-0.5 * x * x);
}

// Direct double-loop evaluation of the SK energy.
inline double naive_energy(const sklo::sk::SkInstance& inst,
                           const sklo::sk::SpinConfiguration& sigma) {
  double h = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = i + 1; j < inst.n; ++j) {
      h += sigma[i] * sigma[j] * inst.weight(i, j);
    }
  }
  return h;
}

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second_diff(const std::function<double(double)>& f, double x,
                          double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - out.mean) * (x - out.mean);
  var /= static_cast<double>(xs.size() - 1);
  out.se = std::sqrt(var / static_cast<double>(xs.size()));
  return out;
}

// Ratio estimator sum(a_i)/sum(b_i) with a linearization standard error.
struct RatioSe {
  double ratio = 0.0;
  double se = 0.0;
};

inline RatioSe ratio_se(const std::vector<double>& a,
                        const std::vector<double>& b) {
  const std::size_t m = a.size();
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sa += a[i];
    sb += b[i];
  }
  RatioSe out;
  out.ratio = sa / sb;
  const double bbar = sb / static_cast<double>(m);
  double var = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double d = a[i] - out.ratio * b[i];
    var += d * d;
  }
  var /= static_cast<double>(m - 1);
  out.se = std::sqrt(var / static_cast<double>(m)) / bbar;
  return out;
}

}  // namespace oracles
