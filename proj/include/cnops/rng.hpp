#pragma once

// Seeded pseudo-random generator used by every randomized routine in the
// library. xoshiro256++ with splitmix64 state expansion; Gaussian variates
// via Box-Muller. Self-contained so that a (seed, stream) pair reproduces
// the same instance stream on every platform.

#include <array>
#include <cmath>
#include <cstdint>

#include "cnops/types.hpp"

namespace cnops {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  /// Decorrelated per-trial seed for a (seed, stream index) pair.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t sm = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
    return splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool coin() { return (next_u64() & 1u) != 0; }

  /// Standard real Gaussian (Box-Muller, one value cached).
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

  /// Standard complex Gaussian: variance 1 overall, independent parts.
  Complex complex_gaussian() {
    return {gaussian() * M_SQRT1_2, gaussian() * M_SQRT1_2};
  }

  Complex unit_phase() {
    const double theta = 2.0 * M_PI * uniform();
    return {std::cos(theta), std::sin(theta)};
  }

private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cnops
