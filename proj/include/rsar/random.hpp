#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace rsar {

// Seeded random source with platform-independent draws.
//
// std::uniform_*_distribution output is implementation-defined, so reports
// would differ between standard libraries. All draws here are derived
// directly from the 64-bit Mersenne Twister output, whose sequence is fixed
// by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, 1], both endpoints reachable.
  double uniform_closed01() {
    return static_cast<double>(engine_() >> 11) / static_cast<double>((1ULL << 53) - 1);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return static_cast<std::size_t>(draw % bound);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Roulette-wheel draw over non-negative weights; uniform when they sum to 0.
  std::size_t roulette(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) return index(weights.size());
    const double target = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (target < acc) return i;
    }
    // Rounding can leave target == total; land on the last positive weight.
    for (std::size_t i = weights.size(); i-- > 0;) {
      if (weights[i] > 0.0) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rsar
