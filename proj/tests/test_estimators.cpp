#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sklo/errors.hpp"
#include "sklo/estimators.hpp"
#include "sklo/gaussian.hpp"
#include "sklo/rate.hpp"
#include "sklo/sk_model.hpp"

using namespace sklo;

namespace {

// Composite Simpson over the tabulated density in linear space; the last
// interval falls back to the trapezoid rule when the count is even.
double grid_moment(const est::GridDensity& d, int power) {
  const std::size_t m = d.log_density.size();
  std::vector<double> v(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double s = static_cast<double>(j) * d.grid_step;
    v[j] = std::exp(d.log_density[j]) * std::pow(s, power);
  }
  double acc = 0.0;
  std::size_t j = 0;
  while (j + 2 < m) {
    acc += d.grid_step / 3.0 * (v[j] + 4.0 * v[j + 1] + v[j + 2]);
    j += 2;
  }
  if (j + 1 < m) acc += 0.5 * d.grid_step * (v[j] + v[j + 1]);
  return acc;
}

double identity_log_moment(std::size_t n) {
  // log E exp(S^2/(4(n-1))) expressed through the local-optimality
  // probability: log P + n log 2 + (1/2) log((2n-2)/(n-2)).
  const double nd = static_cast<double>(n);
  return est::local_opt_probability(n).log_value + nd * std::log(2.0) +
         0.5 * std::log((2.0 * nd - 2.0) / (nd - 2.0));
}

}  // namespace

TEST_CASE("local optimality probability") {
  CHECK_THROWS(est::local_opt_probability(1));

  const auto p2 = est::local_opt_probability(2);
  CHECK(p2.value == 0.5);
  CHECK(p2.log_value == doctest::Approx(std::log(0.5)).epsilon(1e-15));

  // n = 3: every instance has exactly two local optima among 8
  // configurations, so the probability is exactly 1/4.
  const auto p3 = est::local_opt_probability(3);
  CHECK(std::abs(p3.value - 0.25) < 1e-9);
  CHECK(p3.method == est::Method::OrthantQuadrature);
  CHECK(p3.error < 1e-9);

  // Monte Carlo cross-check at n = 12.
  const auto mc = est::mc_local_opt_probability(12, 400000, 7);
  const auto pq = est::local_opt_probability(12);
  CHECK(mc.error > 0.0);
  CHECK(std::abs(pq.value - mc.value) < 3.0 * mc.error);

  // Probabilities decrease in n and stay in (0, 1).
  double prev = 1.0;
  for (std::size_t n : {3, 4, 6, 10, 20, 50}) {
    const double p = est::local_opt_probability(n).value;
    CHECK(p > 0.0);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("half-normal sum density") {
  CHECK(est::default_grid_step(16) == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(est::default_grid_step(10000) == 0.05);

  CHECK_THROWS_AS(est::halfnormal_sum_density(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(est::halfnormal_sum_density(16, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(est::halfnormal_sum_density(16, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(est::halfnormal_sum_density(100, 1e-6), ResourceError);

  // n = 1: exact point samples of 2 f(s).
  {
    const auto d = est::halfnormal_sum_density(1, 0.01);
    CHECK(d.n == 1);
    CHECK(d.grid_start == 0.0);
    for (std::size_t j = 0; j < d.log_density.size(); j += 37) {
      const double s = static_cast<double>(j) * d.grid_step;
      CHECK(std::abs(d.log_density[j] -
                     std::log(2.0 * oracles::normal_pdf(s))) < 1e-10);
    }
  }

  // n = 2 against a direct Simpson convolution oracle.
  {
    const auto d = est::halfnormal_sum_density(2, est::default_grid_step(2));
    for (double s_target : {0.5, 1.0, 2.0, 4.0}) {
      const auto j = static_cast<std::size_t>(std::llround(s_target / d.grid_step));
      const double s = static_cast<double>(j) * d.grid_step;
      const double oracle = oracles::adaptive_simpson(
          [s](double x) {
            return 4.0 * oracles::normal_pdf(x) * oracles::normal_pdf(s - x);
          },
          0.0, s, 1e-14);
      CHECK(std::abs(std::exp(d.log_density[j]) - oracle) < 1e-8 * oracle);
    }
  }

  // n = 16 moments: mass 1, mean n sqrt(2/pi), variance n (1 - 2/pi).
  {
    const auto d = est::halfnormal_sum_density(16, est::default_grid_step(16));
    const double mass = grid_moment(d, 0);
    const double mean = grid_moment(d, 1);
    const double second = grid_moment(d, 2);
    CHECK(std::abs(mass - 1.0) < 1e-8);
    const double mean_true = 16.0 * gauss::kSqrt2OverPi;
    CHECK(std::abs(mean - mean_true) < 1e-6 * mean_true);
    const double var_true = 16.0 * (1.0 - 2.0 / M_PI);
    CHECK(std::abs(second - mean * mean - var_true) < 1e-4 * var_true);
  }
}

TEST_CASE("exponential moment by convolution") {
  CHECK_THROWS(est::exp_moment_convolution(2));

  // n = 3: the moment is exactly 4 (probability 1/4 times 2^3 times
  // sqrt(4/1)).
  const auto m3 = est::exp_moment_convolution(3);
  CHECK(m3.log_value == doctest::Approx(std::log(4.0)).epsilon(1e-7));
  CHECK(m3.method == est::Method::Convolution);

  for (std::size_t n : {8, 32, 128}) {
    const double nd = static_cast<double>(n);
    const double logm = est::exp_moment_convolution(n).log_value;
    // Jensen lower bound: log E >= E[S^2] / (4(n-1)).
    const double es2 = nd + nd * (nd - 1.0) * 2.0 / M_PI;
    CHECK(logm >= es2 / (4.0 * (nd - 1.0)) - 1e-9);
    // Probability <= 1 upper bound through the representation.
    CHECK(logm <= nd * std::log(2.0) +
                      0.5 * std::log((2.0 * nd - 2.0) / (nd - 2.0)) + 1e-9);
    // The representation identity itself: quadrature vs convolution.
    CHECK(std::abs(logm - identity_log_moment(n)) < 1e-5);
  }

  // log-moment / n settles near the count exponent alpha*.
  const double alpha = rate::critical_constants().alpha_star;
  for (std::size_t n : {64, 256, 1024}) {
    const double logm = est::exp_moment_convolution(n).log_value;
    CHECK(std::abs(logm / static_cast<double>(n) - alpha) <
          10.0 / std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("exponential moment by tilted Monte Carlo") {
  CHECK_THROWS(est::exp_moment_tilted_mc(16, 0, 1));

  // Reproducible for a fixed seed.
  const auto a = est::exp_moment_tilted_mc(16, 5000, 42);
  const auto b = est::exp_moment_tilted_mc(16, 5000, 42);
  CHECK(a.log_value == b.log_value);
  CHECK(a.n_samples == 5000);
  CHECK(a.method == est::Method::TiltedMc);

  for (std::size_t n : {16, 64, 256}) {
    const auto mc = est::exp_moment_tilted_mc(n, 200000, 11);
    const auto cv = est::exp_moment_convolution(n);
    CHECK(mc.error > 0.0);
    CHECK(std::abs(mc.log_value - cv.log_value) < 3.0 * mc.error + 1e-9);
  }
}

TEST_CASE("tail probability") {
  CHECK_THROWS_AS(est::tail_probability(16, 0.5), std::domain_error);

  // n = 1: P{|N| >= x} = 2(1 - Phi(x)).
  {
    const auto rep = est::tail_probability(1, 1.0);
    const double exact = 2.0 * (1.0 - gauss::cdf(1.0));
    CHECK(std::abs(std::exp(rep.log_tail.log_value) - exact) < 1e-8 * exact);
    CHECK(rep.mu_star == doctest::Approx(rate::mu_star(1.0)).epsilon(1e-14));
  }

  // CLT: at x = sqrt(2/pi) (the mean) the tail is ~ 1/2 for large n.
  {
    const auto rep = est::tail_probability(256, rate::kXMin);
    CHECK(std::exp(rep.log_tail.log_value) ==
          doctest::Approx(0.5).epsilon(0.02));
  }

  // The finite-n correction r_n is nonnegative and shrinks with n.
  double prev_r = 1e300;
  for (std::size_t n : {16, 64, 256}) {
    const auto rep = est::tail_probability(n, 1.0);
    CHECK(rep.r_n >= -1e-9);
    CHECK(rep.r_n < prev_r);
    prev_r = rep.r_n;
  }
}

TEST_CASE("truncated exponential moment") {
  CHECK_THROWS(est::truncated_exp_moment(16, -1.0, est::Side::Above));

  const std::size_t n = 16;
  const double full = est::exp_moment_convolution(n).log_value;

  // Degenerate truncations recover the full moment or nothing.
  CHECK(est::truncated_exp_moment(n, 0.0, est::Side::Above).log_value ==
        doctest::Approx(full).epsilon(1e-12));
  CHECK(est::truncated_exp_moment(n, 0.0, est::Side::Below).log_value ==
        -std::numeric_limits<double>::infinity());
  CHECK(est::truncated_exp_moment(n, 1e9, est::Side::Below).log_value ==
        doctest::Approx(full).epsilon(1e-12));

  // Splitting at the bulk of the integrand loses nothing.
  const double split =
      static_cast<double>(n) * rate::critical_constants().v_star;
  const double lo =
      est::truncated_exp_moment(n, split, est::Side::Below).log_value;
  const double hi =
      est::truncated_exp_moment(n, split, est::Side::Above).log_value;
  const double m = std::max(lo, hi);
  const double recombined = m + std::log(std::exp(lo - m) + std::exp(hi - m));
  CHECK(std::abs(recombined - full) < 1e-8);
  CHECK(lo <= full + 1e-12);
  CHECK(hi <= full + 1e-12);
}

TEST_CASE("conditional energy tail") {
  CHECK_THROWS(est::conditional_energy_tail(64, -0.1));

  // delta = 0 conditions on nothing.
  CHECK(est::conditional_energy_tail(64, 0.0).value ==
        doctest::Approx(1.0).epsilon(1e-10));

  // Nonincreasing in delta.
  double prev = 1.1;
  for (double delta = 0.0; delta <= 0.61; delta += 0.1) {
    const double v = est::conditional_energy_tail(64, delta).value;
    CHECK(v <= prev + 1e-12);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }

  // Sharp transition around v*/2 at moderate n.
  const double vhalf = 0.5 * rate::critical_constants().v_star;
  CHECK(est::conditional_energy_tail(256, vhalf - 0.1).value > 0.9);
  CHECK(est::conditional_energy_tail(256, vhalf + 0.1).value < 0.02);
}

TEST_CASE("conditional energy mean") {
  const double vhalf = 0.5 * rate::critical_constants().v_star;
  const double m64 = est::conditional_energy_mean(64).value;
  const double m256 = est::conditional_energy_mean(256).value;
  const double m1024 = est::conditional_energy_mean(1024).value;
  CHECK(std::abs(m64 - vhalf) < 0.08);
  CHECK(std::abs(m256 - vhalf) < 0.04);
  CHECK(std::abs(m1024 - vhalf) < 0.02);
  CHECK(std::abs(m1024 - vhalf) < std::abs(m64 - vhalf));

  // Small-n cross-check against exhaustive enumeration: the analytic value
  // is E[sum over local optima of -H n^{-3/2}] / E[#local optima].
  const std::size_t n = 12;
  const double scale = std::pow(static_cast<double>(n), 1.5);
  std::vector<double> num, den;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = sk::sample_instance(n, 9000 + seed);
    const auto res = sk::enumerate_local_optima(inst);
    double s = 0.0;
    for (double e : res.energies) s += -e / scale;
    num.push_back(s);
    den.push_back(static_cast<double>(res.count));
  }
  const auto rs = oracles::ratio_se(num, den);
  const double analytic = est::conditional_energy_mean(n).value;
  CHECK(std::abs(analytic - rs.ratio) < 3.0 * rs.se);
}

TEST_CASE("expected count") {
  // n = 3: exactly two local optima in expectation.
  CHECK(est::expected_count(3).log_count ==
        doctest::Approx(std::log(2.0)).epsilon(1e-9));

  // The per-spin exponent approaches alpha*.
  double prev = 1e300;
  for (std::size_t n : {16, 64, 256, 1024}) {
    const auto rep = est::expected_count(n);
    CHECK(std::abs(rep.exponent_residual) < prev);
    prev = std::abs(rep.exponent_residual);
  }
  CHECK(prev < 0.01);

  // Empirical mean count at n = 12 within sampling error.
  const auto rep12 = est::expected_count(12);
  std::vector<double> counts;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = sk::sample_instance(12, 9000 + seed);
    counts.push_back(
        static_cast<double>(sk::enumerate_local_optima(inst).count));
  }
  const auto ms = oracles::mean_se(counts);
  CHECK(std::abs(std::exp(rep12.log_count) - ms.mean) < 3.0 * ms.se);
}

TEST_CASE("naive Monte Carlo probability") {
  CHECK_THROWS_AS(est::mc_local_opt_probability(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(est::mc_local_opt_probability(2000000, 1000, 1), ResourceError);

  // Identical results regardless of thread count.
  const auto one = est::mc_local_opt_probability(8, 20000, 3, 1);
  const auto four = est::mc_local_opt_probability(8, 20000, 3, 4);
  CHECK(one.value == four.value);
  CHECK(one.method == est::Method::NaiveMc);
  CHECK(one.n_samples == 20000);

  // Small-n agreement with the exact values 1/2 and 1/4.
  const auto p2 = est::mc_local_opt_probability(2, 20000, 5);
  CHECK(std::abs(p2.value - 0.5) < 4.0 * p2.error + 1e-12);
  const auto p3 = est::mc_local_opt_probability(3, 20000, 5);
  CHECK(std::abs(p3.value - 0.25) < 4.0 * p3.error + 1e-12);
}
