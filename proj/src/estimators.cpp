#include "sklo/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "sklo/errors.hpp"
#include "sklo/gaussian.hpp"
#include "sklo/rate.hpp"
#include "sklo/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sklo::est {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kConvWindow = 60.0;  // nats below the per-point maximum

// ---------------------------------------------------------------------------
// Composite quadrature weights on a uniform grid of `npts` points: Gregory
// end corrections of order 6 when the stencil fits, lower-order closed
// Newton-Cotes style fallbacks for short spans.

constexpr double kGregory6[5] = {95.0 / 288.0, 317.0 / 240.0, 23.0 / 30.0,
                                 793.0 / 720.0, 157.0 / 160.0};
constexpr double kGregory4[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};

double quad_weight(std::size_t i, std::size_t npts) {
  if (npts < 2) return 0.0;
  const std::size_t m = std::min(i, npts - 1 - i);
  switch (npts) {
    case 2:
      return 0.5;
    case 3:
      return m == 0 ? 1.0 / 3.0 : 4.0 / 3.0;
    case 4:
      return m == 0 ? 3.0 / 8.0 : 9.0 / 8.0;
    case 5: {
      constexpr double w[3] = {14.0 / 45.0, 64.0 / 45.0, 24.0 / 45.0};
      return w[m];
    }
    default:
      break;
  }
  if (npts < 10) {
    return m < 3 ? kGregory4[m] : 1.0;
  }
  return m < 5 ? kGregory6[m] : 1.0;
}

// ---------------------------------------------------------------------------
// Log-space linear convolution of two tabulated log densities on step h.
// Per output point: scan for the maximum, then accumulate quadrature-weighted
// exp terms within kConvWindow nats of it.

std::vector<double> conv_log(const std::vector<double>& la,
                             const std::vector<double>& lb, double h,
                             std::size_t out_len) {
  const std::size_t na = la.size();
  const std::size_t nb = lb.size();
  std::vector<double> out(out_len, kNegInf);
#pragma omp parallel for schedule(static)
  for (std::int64_t ks = 0; ks < static_cast<std::int64_t>(out_len); ++ks) {
    const std::size_t k = static_cast<std::size_t>(ks);
    const std::size_t jlo = k >= nb ? k - nb + 1 : 0;
    const std::size_t jhi = std::min(na - 1, k);
    if (jhi <= jlo) continue;  // zero-length interval
    const std::size_t npts = jhi - jlo + 1;
    double m = kNegInf;
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const double t = la[j] + lb[k - j];
      if (t > m) m = t;
    }
    if (m == kNegInf) continue;
    const double cut = m - kConvWindow;
    double acc = 0.0;
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const double t = la[j] + lb[k - j];
      if (t >= cut) {
        acc += quad_weight(j - jlo, npts) * std::exp(t - m);
      }
    }
    if (acc > 0.0) out[k] = m + std::log(h * acc);
  }
  return out;
}

std::size_t support_points(std::size_t m, double h) {
  const double edge = static_cast<double>(m) * gauss::kSqrt2OverPi +
                      12.0 * std::sqrt(static_cast<double>(m));
  return static_cast<std::size_t>(std::ceil(edge / h)) + 1;
}

// ---------------------------------------------------------------------------
// Integrals of exp(logg) over the grid, in log space.

double log_weighted_sum(const std::vector<double>& logg, std::size_t i0,
                        std::size_t i1, double h) {
  if (i1 <= i0) return kNegInf;
  const std::size_t npts = i1 - i0 + 1;
  double m = kNegInf;
  for (std::size_t i = i0; i <= i1; ++i) m = std::max(m, logg[i]);
  if (m == kNegInf) return kNegInf;
  double acc = 0.0;
  for (std::size_t i = i0; i <= i1; ++i) {
    if (logg[i] > m - 745.0) {
      acc += quad_weight(i - i0, npts) * std::exp(logg[i] - m);
    }
  }
  return acc > 0.0 ? m + std::log(h * acc) : kNegInf;
}

double logaddexp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// Cubic Lagrange interpolation of log values at abscissa s; falls back to
// -inf when the stencil touches the zero-density region (negligible mass).
double interp_log(const std::vector<double>& logg, double h, double s) {
  const std::size_t nn = logg.size();
  if (nn < 4) return kNegInf;
  double fj = std::floor(s / h);
  std::size_t j0;
  if (fj < 1.0) {
    j0 = 0;
  } else {
    j0 = std::min(static_cast<std::size_t>(fj) - 1, nn - 4);
  }
  const double v[4] = {logg[j0], logg[j0 + 1], logg[j0 + 2], logg[j0 + 3]};
  for (double x : v) {
    if (!(x > -1e300)) return kNegInf;
  }
  const double t = s / h - static_cast<double>(j0);
  const double l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  const double l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  const double l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  const double l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return l0 * v[0] + l1 * v[1] + l2 * v[2] + l3 * v[3];
}

// 5-point Gauss-Legendre over [a, b] on the interpolated log integrand.
double log_partial_cell(const std::vector<double>& logg, double h, double a,
                        double b) {
  if (!(b > a)) return kNegInf;
  constexpr double nodes[5] = {0.046910077030668004, 0.23076534494715845, 0.5,
                               0.76923465505284155, 0.953089922969332};
  constexpr double wts[5] = {0.11846344252809454, 0.23931433524968324,
                             0.28444444444444444, 0.23931433524968324,
                             0.11846344252809454};
  double lv[5];
  double m = kNegInf;
  for (int i = 0; i < 5; ++i) {
    lv[i] = interp_log(logg, h, a + (b - a) * nodes[i]);
    m = std::max(m, lv[i]);
  }
  if (m == kNegInf) return kNegInf;
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) {
    acc += wts[i] * std::exp(lv[i] - m);
  }
  return m + std::log((b - a) * acc);
}

// log of int_lo^hi exp(logg(s)) ds, grid-aligned Gregory core plus
// interpolated partial cells at both ends.
double log_integral_range(const std::vector<double>& logg, double h, double lo,
                          double hi) {
  const double end = static_cast<double>(logg.size() - 1) * h;
  lo = std::max(lo, 0.0);
  hi = std::min(hi, end);
  if (!(hi > lo)) return kNegInf;
  const double eps = 1e-9 * h;
  const auto i0 = static_cast<std::size_t>(std::ceil(lo / h - 1e-9));
  const auto i1 = static_cast<std::size_t>(std::floor(hi / h + 1e-9));
  if (static_cast<double>(i1) * h < lo) {
    // the whole range lies strictly inside one cell
    return log_partial_cell(logg, h, lo, hi);
  }
  double total = log_weighted_sum(logg, i0, i1, h);
  if (static_cast<double>(i0) * h > lo + eps) {
    total = logaddexp(total,
                      log_partial_cell(logg, h, lo, static_cast<double>(i0) * h));
  }
  if (static_cast<double>(i1) * h < hi - eps) {
    total = logaddexp(total,
                      log_partial_cell(logg, h, static_cast<double>(i1) * h, hi));
  }
  return total;
}

double log_integral_full(const std::vector<double>& logg, double h) {
  return log_weighted_sum(logg, 0, logg.size() - 1, h);
}

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod 7-15.

constexpr double kXgk[8] = {0.99145537112081263921, 0.94910791234275852453,
                            0.86486442335976907279, 0.74153118559939443986,
                            0.58608723546769113029, 0.40584515137739716691,
                            0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {0.02293532201052922496, 0.06309209262997855329,
                            0.10479001032225018384, 0.14065325971552591875,
                            0.16900472663926790283, 0.19035057806478540991,
                            0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

template <typename F>
void gk15(F&& f, double a, double b, double& integral, double& err) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double resk = 0.0;
  double resg = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double x = hw * kXgk[i];
    const double fv = f(c - x) + f(c + x);
    resk += kWgk[i] * fv;
    if (i % 2 == 1) resg += kWg[i / 2] * fv;
  }
  const double fc = f(c);
  resk += kWgk[7] * fc;
  resg += kWg[3] * fc;
  integral = resk * hw;
  err = std::abs((resk - resg) * hw);
}

template <typename F>
double adaptive_gk(F&& f, double a, double b, double tol, double* err_out,
                   int depth = 0) {
  double integral, err;
  gk15(f, a, b, integral, err);
  if (err <= tol || depth >= 40) {
    if (err_out) *err_out = err;
    return integral;
  }
  const double c = 0.5 * (a + b);
  double e1 = 0.0, e2 = 0.0;
  const double left = adaptive_gk(f, a, c, 0.5 * tol, &e1, depth + 1);
  const double right = adaptive_gk(f, c, b, 0.5 * tol, &e2, depth + 1);
  if (err_out) *err_out = e1 + e2;
  return left + right;
}

// ---------------------------------------------------------------------------
// Density cache (immutable after construction, shared across callers).

const GridDensity& cached_density(std::size_t n) {
  static std::mutex mtx;
  static std::map<std::size_t, std::unique_ptr<GridDensity>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto d = std::make_unique<GridDensity>(
        halfnormal_sum_density(n, default_grid_step(n)));
    it = cache.emplace(n, std::move(d)).first;
  }
  return *it->second;
}

// Log integrand of the exponential moment: log density + s^2 / (4(n-1)).
std::vector<double> exp_moment_log_integrand(const GridDensity& d) {
  const double n = static_cast<double>(d.n);
  std::vector<double> logg(d.log_density.size());
  for (std::size_t j = 0; j < logg.size(); ++j) {
    const double s = static_cast<double>(j) * d.grid_step;
    logg[j] = d.log_density[j] + s * s / (4.0 * (n - 1.0));
  }
  return logg;
}

void require_n3(std::size_t n, const char* where) {
  if (n < 3) {
    throw std::invalid_argument(std::string(where) + ": n must be >= 3");
  }
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::OrthantQuadrature:
      return "orthant-quadrature";
    case Method::Convolution:
      return "convolution";
    case Method::TiltedMc:
      return "tilted-mc";
    case Method::NaiveMc:
      return "naive-mc";
    case Method::BruteForce:
      return "brute-force";
  }
  return "unknown";
}

double default_grid_step(std::size_t n) {
  return std::min(0.01 * std::sqrt(static_cast<double>(n)), 0.05);
}

GridDensity halfnormal_sum_density(std::size_t n, double grid_step) {
  if (n < 1) {
    throw std::invalid_argument("halfnormal_sum_density: n must be >= 1");
  }
  if (!(grid_step > 0.0) ||
      grid_step > 0.01 * std::sqrt(static_cast<double>(n)) + 1e-15) {
    throw std::invalid_argument(
        "halfnormal_sum_density: grid_step must lie in (0, 0.01*sqrt(n)]");
  }
  const double h = grid_step;

  // Early levels run on a kRefine-times finer grid and are downsampled once
  // the partial sum exceeds kRefineUpTo terms. The first grid cells of a
  // freshly convolved density carry the largest relative quadrature error
  // (few-point stencils on a narrow integrand), and every later convolution
  // inherits that error across its whole support; refining where the error
  // is born shrinks it by kRefine^4 before it can propagate.
  constexpr std::size_t kRefine = 8;
  constexpr std::size_t kRefineUpTo = 16;
  const double hf = h / static_cast<double>(kRefine);
  auto fine_len = [&](std::size_t m) {
    return (support_points(m, h) - 1) * kRefine + 1;
  };

  if (support_points(n, grid_step) > (1ULL << 26) ||
      fine_len(std::min(n, kRefineUpTo)) > (1ULL << 26)) {
    throw ResourceError("halfnormal_sum_density: grid longer than 2^26 points");
  }

  std::vector<double> base(fine_len(1));
  for (std::size_t j = 0; j < base.size(); ++j) {
    const double x = static_cast<double>(j) * hf;
    base[j] = std::log(2.0) + gauss::log_pdf(x);
  }

  // Binary decomposition: square the running power, fold set bits into the
  // accumulator.
  std::vector<double> acc;
  std::size_t acc_m = 0;
  std::vector<double> power = base;
  std::size_t power_m = 1;
  bool fine = true;
  auto coarsen = [&](std::vector<double>& v, std::size_t m) {
    std::vector<double> c(support_points(m, h));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = v[i * kRefine];
    v = std::move(c);
  };
  auto maybe_coarsen = [&](std::size_t m_out) {
    if (fine && m_out > kRefineUpTo) {
      if (acc_m > 0) coarsen(acc, acc_m);
      coarsen(power, power_m);
      fine = false;
    }
  };
  std::size_t rem = n;
  for (;;) {
    if (rem & 1) {
      if (acc_m == 0) {
        acc = power;
        acc_m = power_m;
      } else {
        maybe_coarsen(acc_m + power_m);
        acc_m += power_m;
        acc = conv_log(acc, power, fine ? hf : h,
                       fine ? fine_len(acc_m) : support_points(acc_m, h));
      }
    }
    rem >>= 1;
    if (rem == 0) break;
    maybe_coarsen(power_m * 2);
    power_m *= 2;
    power = conv_log(power, power, fine ? hf : h,
                     fine ? fine_len(power_m) : support_points(power_m, h));
  }
  if (fine) coarsen(acc, acc_m);

  GridDensity d;
  d.n = n;
  d.grid_start = 0.0;
  d.grid_step = h;
  d.log_density = std::move(acc);
  return d;
}

EstimateWithError local_opt_probability(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("local_opt_probability: n must be >= 2");
  }
  EstimateWithError out;
  out.method = Method::OrthantQuadrature;
  if (n == 2) {
    // Covariance degenerates (n-2 = 0): Z_1 = Z_2 = -s1 s2 W12, so the
    // probability is 1/2 by sign symmetry.
    out.value = 0.5;
    out.log_value = std::log(0.5);
    out.error = 0.0;
    return out;
  }
  const double nd = static_cast<double>(n);
  // Substituting g = sqrt(n-2) t in int f(g) Phi(g/sqrt(n-2))^n dg.
  auto lg = [nd](double t) {
    return 0.5 * std::log(nd - 2.0) - 0.5 * gauss::kLog2Pi -
           0.5 * (nd - 2.0) * t * t + nd * gauss::log_cdf(t);
  };
  // The peak solves (n-2) t = n phi'(t); the gap is strictly decreasing.
  double lo = 0.0, hi = 1.0;
  auto gap = [nd](double t) {
    return nd * gauss::phi_prime(t) - (nd - 2.0) * t;
  };
  while (gap(hi) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  const double t_star = 0.5 * (lo + hi);
  const double peak = lg(t_star);

  double t_lo = t_star;
  while (lg(t_lo) > peak - 46.0) t_lo -= 0.1;
  double t_hi = t_star;
  while (lg(t_hi) > peak - 46.0) t_hi += 0.1;

  auto f = [&](double t) { return std::exp(lg(t) - peak); };
  double err = 0.0;
  const double integral = adaptive_gk(f, t_lo, t_hi, 1e-12, &err);
  out.log_value = peak + std::log(integral);
  out.value = out.log_value < 700.0 ? std::exp(out.log_value) : 0.0;
  out.error = err / integral;
  return out;
}

EstimateWithError exp_moment_convolution(std::size_t n) {
  require_n3(n, "exp_moment_convolution");
  const GridDensity& d = cached_density(n);
  const std::vector<double> logg = exp_moment_log_integrand(d);
  EstimateWithError out;
  out.method = Method::Convolution;
  out.log_value = log_integral_full(logg, d.grid_step);
  out.value = out.log_value < 700.0 ? std::exp(out.log_value)
                                    : std::numeric_limits<double>::infinity();
  out.error = 1e-9;
  return out;
}

EstimateWithError exp_moment_tilted_mc(std::size_t n, std::uint64_t samples,
                                       std::uint64_t seed) {
  require_n3(n, "exp_moment_tilted_mc");
  if (samples == 0) {
    throw std::invalid_argument("exp_moment_tilted_mc: zero sample budget");
  }
  const double lambda = rate::critical_constants().lambda_at_vstar;
  const double nd = static_cast<double>(n);
  std::vector<double> logw(samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(samples); ++r) {
    rng::CounterStream stream(seed, static_cast<std::uint64_t>(r));
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      // lambda-tilted half-normal: N(lambda, 1) conditioned on [0, inf).
      double t;
      do {
        t = lambda + stream.next_normal();
      } while (t < 0.0);
      s += t;
    }
    logw[r] = s * s / (4.0 * (nd - 1.0)) - lambda * s;
  }
  // Fixed-order reduction for bit-reproducibility across thread counts.
  double m = kNegInf;
  for (double w : logw) m = std::max(m, w);
  double mean = 0.0;
  for (double w : logw) mean += std::exp(w - m);
  mean /= static_cast<double>(samples);
  double var = 0.0;
  for (double w : logw) {
    const double dlt = std::exp(w - m) - mean;
    var += dlt * dlt;
  }
  var /= static_cast<double>(samples - (samples > 1 ? 1 : 0));
  const double se_mean = std::sqrt(var / static_cast<double>(samples));

  EstimateWithError out;
  out.method = Method::TiltedMc;
  out.log_value = nd * gauss::halfnormal_log_mgf(lambda) + m + std::log(mean);
  out.value = out.log_value < 700.0 ? std::exp(out.log_value)
                                    : std::numeric_limits<double>::infinity();
  out.error = se_mean / mean;  // standard error of the log estimate
  out.n_samples = samples;
  return out;
}

TailReport tail_probability(std::size_t n, double x) {
  if (n < 1) {
    throw std::invalid_argument("tail_probability: n must be >= 1");
  }
  if (x < rate::kXMin - 1e-12) {
    throw std::domain_error("tail_probability: x below sqrt(2/pi)");
  }
  const GridDensity& d = cached_density(n);
  const double end = static_cast<double>(d.log_density.size() - 1) * d.grid_step;
  TailReport rep;
  rep.log_tail.method = Method::Convolution;
  rep.log_tail.log_value = log_integral_range(
      d.log_density, d.grid_step, static_cast<double>(n) * x, end);
  rep.log_tail.value = std::exp(rep.log_tail.log_value);
  rep.log_tail.error = 1e-9;
  rep.mu_star = rate::mu_star(std::max(x, rate::kXMin));
  rep.r_n = -rep.log_tail.log_value / static_cast<double>(n) - rep.mu_star;
  return rep;
}

EstimateWithError truncated_exp_moment(std::size_t n, double bound, Side side) {
  require_n3(n, "truncated_exp_moment");
  if (!(bound >= 0.0)) {
    throw std::invalid_argument("truncated_exp_moment: bound must be >= 0");
  }
  const GridDensity& d = cached_density(n);
  const std::vector<double> logg = exp_moment_log_integrand(d);
  const double end = static_cast<double>(logg.size() - 1) * d.grid_step;
  EstimateWithError out;
  out.method = Method::Convolution;
  if (side == Side::Above) {
    out.log_value = log_integral_range(logg, d.grid_step, bound, end);
  } else {
    out.log_value = log_integral_range(logg, d.grid_step, 0.0,
                                       std::min(bound, end));
  }
  out.value = out.log_value < 700.0 ? std::exp(out.log_value)
                                    : std::numeric_limits<double>::infinity();
  out.error = 1e-9;
  return out;
}

EstimateWithError conditional_energy_tail(std::size_t n, double delta) {
  require_n3(n, "conditional_energy_tail");
  if (delta < 0.0) {
    throw std::invalid_argument("conditional_energy_tail: delta must be >= 0");
  }
  const double nd = static_cast<double>(n);
  const double threshold = 2.0 * delta * std::pow(nd, 1.5) / std::sqrt(nd - 2.0);
  const EstimateWithError above = truncated_exp_moment(n, threshold, Side::Above);
  const EstimateWithError full = exp_moment_convolution(n);
  EstimateWithError out;
  out.method = Method::Convolution;
  out.log_value = above.log_value - full.log_value;
  out.value = std::clamp(std::exp(out.log_value), 0.0, 1.0);
  out.log_value = std::min(out.log_value, 0.0);
  out.error = 1e-8;
  return out;
}

EstimateWithError conditional_energy_mean(std::size_t n) {
  require_n3(n, "conditional_energy_mean");
  const GridDensity& d = cached_density(n);
  std::vector<double> logg = exp_moment_log_integrand(d);
  const double log_full = log_integral_full(logg, d.grid_step);
  for (std::size_t j = 0; j < logg.size(); ++j) {
    const double s = static_cast<double>(j) * d.grid_step;
    logg[j] += s > 0.0 ? std::log(s) : kNegInf;
  }
  const double log_first = log_integral_full(logg, d.grid_step);
  const double nd = static_cast<double>(n);
  EstimateWithError out;
  out.method = Method::Convolution;
  out.value = std::exp(log_first - log_full) * std::sqrt(nd - 2.0) /
              (2.0 * std::pow(nd, 1.5));
  out.log_value = std::log(out.value);
  out.error = 1e-8;
  return out;
}

CountReport expected_count(std::size_t n) {
  require_n3(n, "expected_count");
  const EstimateWithError p = local_opt_probability(n);
  CountReport rep;
  rep.log_count = static_cast<double>(n) * 0.69314718055994530942 + p.log_value;
  rep.exponent_residual =
      rep.log_count / static_cast<double>(n) - rate::critical_constants().alpha_star;
  return rep;
}

EstimateWithError mc_local_opt_probability(std::size_t n, std::uint64_t samples,
                                           std::uint64_t seed, int threads) {
  if (n < 2) {
    throw std::invalid_argument("mc_local_opt_probability: n must be >= 2");
  }
  if (samples == 0) {
    throw std::invalid_argument("mc_local_opt_probability: zero sample budget");
  }
  if (static_cast<double>(n) * static_cast<double>(n) *
          static_cast<double>(samples) >
      4e12) {
    throw ResourceError("mc_local_opt_probability: n^2 * samples budget exceeded");
  }
#ifdef _OPENMP
  const int prev = omp_get_max_threads();
  if (threads > 0) omp_set_num_threads(threads);
#endif
  std::uint64_t hits = 0;
#pragma omp parallel
  {
    std::vector<double> row_sum(n);
#pragma omp for schedule(static) reduction(+ : hits)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
      const std::uint64_t key = rng::hash2(seed, static_cast<std::uint64_t>(s));
      std::fill(row_sum.begin(), row_sum.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const double w = rng::standard_normal(key, i, j);
          row_sum[i] += w;
          row_sum[j] += w;
        }
      }
      // All-ones sigma: Z_i = -row_sum[i], locally optimal iff all <= 0.
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (row_sum[i] > 0.0) {
          ok = false;
          break;
        }
      }
      if (ok) hits += 1;
    }
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(prev);
#endif
  EstimateWithError out;
  out.method = Method::NaiveMc;
  out.value = static_cast<double>(hits) / static_cast<double>(samples);
  out.log_value = out.value > 0.0 ? std::log(out.value) : kNegInf;
  out.error = std::sqrt(out.value * (1.0 - out.value) /
                        static_cast<double>(samples));
  out.n_samples = samples;
  return out;
}

}  // namespace sklo::est
