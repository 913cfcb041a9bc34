#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random number generation. Every draw is a pure function of
// (seed, stream, counter), so samples are reproducible regardless of the
// order in which parallel workers request them.

namespace sklo::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = mix64(a);
  h = mix64(h ^ mix64(b + kGolden));
  return h;
}

inline std::uint64_t hash3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = mix64(a);
  h = mix64(h ^ mix64(b + kGolden));
  h = mix64(h ^ mix64(c + 2 * kGolden));
  return h;
}

inline std::uint64_t hash4(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                           std::uint64_t d) {
  std::uint64_t h = hash3(a, b, c);
  return mix64(h ^ mix64(d + 3 * kGolden));
}

// Uniform in the open interval (0, 1).
inline double to_u01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

// One standard normal keyed by (seed, a, b); Box-Muller on two hashed
// uniforms. Independent of evaluation order.
inline double standard_normal(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  const double u1 = to_u01(hash4(seed, a, b, 0));
  const double u2 = to_u01(hash4(seed, a, b, 1));
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

// A sequential stream derived from (seed, stream index). Each worker owns
// one; the draw count may vary between replicas without affecting others.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_(hash2(seed, stream)) {}

  std::uint64_t next_u64() { return hash2(key_, counter_++); }

  double next_u01() { return to_u01(next_u64()); }

  double next_normal() {
    const double u1 = next_u01();
    const double u2 = next_u01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform integer in [0, m), m >= 1. Rejection keeps it unbiased.
  std::uint64_t next_below(std::uint64_t m) {
    const std::uint64_t limit = m * (~0ULL / m);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % m;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sklo::rng
