#pragma once

#include <cstdint>

#include "supercong/rational.hpp"

namespace supercong {

/// SplitMix64. Used instead of <random> distributions so that seeded
/// parameter grids are identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// num/den with |num| <= max_num and 1 <= den <= max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    const auto num = uniform(-max_num, max_num);
    const auto den = uniform(1, max_den);
    return make_rational(num, den);
  }

 private:
  std::uint64_t state_;
};

/// Mixes a run seed with a per-stream tag so independent tasks draw
/// independent, schedule-free streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mix(seed ^ (stream * 0xD1B54A32D192ED03ULL));
  return mix.next();
}

}  // namespace supercong
