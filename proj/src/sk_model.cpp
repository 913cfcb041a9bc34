#include "sklo/sk_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "sklo/errors.hpp"
#include "sklo/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sklo::sk {

namespace {

void check_dims(const SkInstance& inst, const SpinConfiguration& sigma) {
  if (sigma.size() != inst.n) {
    throw std::invalid_argument("spin configuration size does not match instance");
  }
}

// Spin vector for Gray code g: bit i set means spin i is -1.
SpinConfiguration spins_from_code(std::size_t n, std::uint64_t code) {
  SpinConfiguration sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = (code >> i) & 1ULL ? -1 : 1;
  }
  return sigma;
}

}  // namespace

SkInstance sample_instance(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("sample_instance: n must be >= 2");
  }
  SkInstance inst;
  inst.n = n;
  inst.seed = seed;
  inst.weights.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = rng::standard_normal(seed, i, j);
      inst.weights[i * n + j] = w;
      inst.weights[j * n + i] = w;
    }
  }
  return inst;
}

double energy(const SkInstance& inst, const SpinConfiguration& sigma) {
  check_dims(inst, sigma);
  double h = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    double row = 0.0;
    for (std::size_t j = i + 1; j < inst.n; ++j) {
      row += sigma[j] * inst.weight(i, j);
    }
    h += sigma[i] * row;
  }
  return h;
}

LocalFields local_fields(const SkInstance& inst, const SpinConfiguration& sigma) {
  check_dims(inst, sigma);
  LocalFields out;
  out.z.resize(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < inst.n; ++j) {
      s += sigma[j] * inst.weight(i, j);  // diagonal is zero
    }
    out.z[i] = -static_cast<double>(sigma[i]) * s;
  }
  out.energy = energy(inst, sigma);
  return out;
}

bool is_local_min(const SkInstance& inst, const SpinConfiguration& sigma) {
  const LocalFields lf = local_fields(inst, sigma);
  return std::all_of(lf.z.begin(), lf.z.end(), [](double z) { return z >= 0.0; });
}

DescentTrace greedy_descent(const SkInstance& inst, const SpinConfiguration& start,
                            DescentRule rule, std::uint64_t rng_seed) {
  check_dims(inst, start);
  const std::size_t n = inst.n;
  DescentTrace trace;
  trace.final = start;
  SpinConfiguration& sigma = trace.final;
  LocalFields lf = local_fields(inst, sigma);
  double h = lf.energy;
  std::vector<double>& z = lf.z;
  rng::CounterStream stream(rng_seed, 0);
  std::vector<std::size_t> improving;
  improving.reserve(n);

  for (;;) {
    std::size_t pick = n;
    switch (rule) {
      case DescentRule::FirstImprovement:
        for (std::size_t i = 0; i < n; ++i) {
          if (z[i] < 0.0) {
            pick = i;
            break;
          }
        }
        break;
      case DescentRule::Steepest: {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (z[i] < best) {  // ties broken by lowest index
            best = z[i];
            pick = i;
          }
        }
        break;
      }
      case DescentRule::RandomImprovement: {
        improving.clear();
        for (std::size_t i = 0; i < n; ++i) {
          if (z[i] < 0.0) improving.push_back(i);
        }
        if (!improving.empty()) {
          pick = improving[stream.next_below(improving.size())];
        }
        break;
      }
    }
    if (pick == n) break;

    h += 2.0 * z[pick];
    trace.flips.push_back(pick);
    trace.energies.push_back(h);
    // Incremental field update with the pre-flip sign of the picked spin.
    const double si = sigma[pick];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pick) continue;
      z[j] += 2.0 * si * sigma[j] * inst.weight(pick, j);
    }
    z[pick] = -z[pick];
    sigma[pick] = -sigma[pick];
  }

  trace.normalized_energy = h / std::pow(static_cast<double>(n), 1.5);
  return trace;
}

EnumerationResult enumerate_local_optima(const SkInstance& inst, int threads) {
  const std::size_t n = inst.n;
  if (n > 26) {
    throw ResourceError("enumerate_local_optima: n > 26");
  }
  const std::uint64_t total = 1ULL << n;
  // Fixed block layout independent of the thread count, so output is
  // byte-stable for any parallel schedule.
  const std::size_t block_bits = n > 14 ? n - 8 : n;
  const std::uint64_t block_len = 1ULL << block_bits;
  const std::uint64_t nblocks = total >> block_bits;
  std::vector<std::vector<double>> per_block(nblocks);

#ifdef _OPENMP
  const int prev = omp_get_max_threads();
  if (threads > 0) omp_set_num_threads(threads);
#endif
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    const std::uint64_t k0 = static_cast<std::uint64_t>(b) * block_len;
    SpinConfiguration sigma = spins_from_code(n, k0 ^ (k0 >> 1));
    LocalFields lf = local_fields(inst, sigma);
    double h = lf.energy;
    std::vector<double>& z = lf.z;
    std::vector<double>& found = per_block[b];

    auto record_if_min = [&] {
      for (std::size_t i = 0; i < n; ++i) {
        if (z[i] < 0.0) return;
      }
      found.push_back(h);
    };
    record_if_min();

    for (std::uint64_t k = k0 + 1; k < k0 + block_len; ++k) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(k));
      h += 2.0 * z[i];
      const double si = sigma[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        z[j] += 2.0 * si * sigma[j] * inst.weight(i, j);
      }
      z[i] = -z[i];
      sigma[i] = -sigma[i];
      record_if_min();
    }
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(prev);
#endif

  EnumerationResult res;
  for (const auto& v : per_block) {
    res.energies.insert(res.energies.end(), v.begin(), v.end());
  }
  res.count = res.energies.size();
  return res;
}

EnumerationResult enumerate_local_optima_serial(const SkInstance& inst) {
  const std::size_t n = inst.n;
  if (n > 26) {
    throw ResourceError("enumerate_local_optima_serial: n > 26");
  }
  EnumerationResult res;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    const SpinConfiguration sigma = spins_from_code(n, k);
    const LocalFields lf = local_fields(inst, sigma);
    bool ok = true;
    for (double z : lf.z) {
      if (z < 0.0) {
        ok = false;
        break;
      }
    }
    if (ok) res.energies.push_back(lf.energy);
  }
  res.count = res.energies.size();
  return res;
}

double cut_value(const SkInstance& inst, const std::vector<std::size_t>& subset) {
  std::vector<char> in_s(inst.n, 0);
  for (std::size_t i : subset) {
    if (i >= inst.n) {
      throw std::invalid_argument("cut_value: index out of range");
    }
    in_s[i] = 1;
  }
  double cut = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!in_s[i]) continue;
    for (std::size_t j = 0; j < inst.n; ++j) {
      if (!in_s[j]) cut += inst.weight(i, j);
    }
  }
  return cut;
}

bool cut_energy_identity(const SkInstance& inst, const std::vector<std::size_t>& subset,
                         double tol) {
  std::vector<char> in_s(inst.n, 0);
  for (std::size_t i : subset) in_s[i] = 1;
  SpinConfiguration sigma(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) sigma[i] = in_s[i] ? 1 : -1;
  double total_w = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = i + 1; j < inst.n; ++j) total_w += inst.weight(i, j);
  }
  const double lhs = cut_value(inst, subset);
  const double rhs = 0.5 * (-energy(inst, sigma) + total_w);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= tol * scale;
}

SpinConfiguration random_configuration(std::size_t n, std::uint64_t seed) {
  rng::CounterStream stream(seed, 1);
  SpinConfiguration sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = (stream.next_u64() & 1ULL) ? 1 : -1;
  }
  return sigma;
}

}  // namespace sklo::sk
