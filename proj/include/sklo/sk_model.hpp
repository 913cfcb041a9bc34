#pragma once

#include <cstdint>
#include <vector>

// The SK Hamiltonian H(sigma) = sum_{i<j} sigma_i sigma_j W_ij on the
// complete graph: instance sampling, energies, local fields, local-minimum
// tests, greedy descent, exhaustive enumeration, and the MaxCut view.

namespace sklo::sk {

// Entries are exactly +1 or -1.
using SpinConfiguration = std::vector<int>;

struct SkInstance {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> weights;  // dense n x n, symmetric, zero diagonal

  double weight(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
};

// Upper-triangle entries are i.i.d. standard normal from a counter-based
// stream keyed by (seed, i, j); bit-exactly reproducible from (n, seed).
SkInstance sample_instance(std::size_t n, std::uint64_t seed);

double energy(const SkInstance& inst, const SpinConfiguration& sigma);

struct LocalFields {
  std::vector<double> z;  // z_i = (H(sigma^(i)) - H(sigma)) / 2
  double energy = 0.0;
};

LocalFields local_fields(const SkInstance& inst, const SpinConfiguration& sigma);

// True iff every local field is >= 0 (ties count as locally optimal).
bool is_local_min(const SkInstance& inst, const SpinConfiguration& sigma);

enum class DescentRule { Steepest, FirstImprovement, RandomImprovement };

struct DescentTrace {
  std::vector<std::size_t> flips;
  std::vector<double> energies;  // H after each flip, strictly decreasing
  SpinConfiguration final;
  double normalized_energy = 0.0;  // n^{-3/2} H(final)
};

// Flips spins with strictly negative local field, chosen by `rule`, until
// none remain. Maintains fields incrementally; the endpoint is a local min.
DescentTrace greedy_descent(const SkInstance& inst, const SpinConfiguration& start,
                            DescentRule rule, std::uint64_t rng_seed);

struct EnumerationResult {
  std::uint64_t count = 0;
  std::vector<double> energies;  // H of each local optimum
};

// Visits all 2^n configurations in Gray-code order with O(n) incremental
// field updates; parallel over fixed blocks so results are independent of
// the thread count. Rejects n > 26.
EnumerationResult enumerate_local_optima(const SkInstance& inst, int threads = 0);

// Serial reference: recomputes local fields from scratch per configuration
// (O(n^2 2^n)). Kept for testing and benchmarking the kernel above.
EnumerationResult enumerate_local_optima_serial(const SkInstance& inst);

// Sum of W_ij over i in S, j outside S.
double cut_value(const SkInstance& inst, const std::vector<std::size_t>& subset);

// Checks Cut(S) = (-H(sigma_S) + sum_{i<j} W_ij) / 2 within tol, where
// sigma_S is +1 on S and -1 off it.
bool cut_energy_identity(const SkInstance& inst, const std::vector<std::size_t>& subset,
                         double tol = 1e-9);

// Uniform random configuration from a counter-based stream.
SpinConfiguration random_configuration(std::size_t n, std::uint64_t seed);

}  // namespace sklo::sk
