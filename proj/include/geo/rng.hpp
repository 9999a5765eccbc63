#pragma once

#include <cstdint>

namespace geo {

/// splitmix64: state advances by the 64-bit golden-gamma constant and the
/// output is a bijective mix of the new state. Chosen for cross-platform
/// reproducibility of trial streams: identical seeds give identical bytes
/// everywhere.
class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [lo, hi] by modulo; determinism matters here, the
  /// negligible modulo bias does not.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool next_bool() { return (next() & 1) != 0; }

  /// The i-th output of a splitmix64 stream seeded with `seed`, computed
  /// without stepping. Used to derive independent per-trial seeds.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace geo
