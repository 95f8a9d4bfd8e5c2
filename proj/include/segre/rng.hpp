#pragma once

#include <cstdint>
#include <initializer_list>

namespace segre {

inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic, platform-independent stream of pseudo-random values.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept { return splitmix64(state_); }

  /// Uniform element of [0, m). Bias is O(m / 2^64), irrelevant here.
  std::uint32_t below(std::uint32_t m) noexcept {
    return static_cast<std::uint32_t>(next() % m);
  }

private:
  std::uint64_t state_;
};

/// Mixes a seed with a list of tags into an independent sub-seed, so
/// computations indexed by the tags can run in any order (or in parallel)
/// without changing their results.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = seed ^ 0xA0761D6478BD642Full;
  for (std::uint64_t t : tags) {
    s = splitmix64(s) ^ (t * 0xE7037ED1A0B428DBull);
  }
  return splitmix64(s);
}

/// Seed and repetition count for the Monte-Carlo parts of the engine.
struct RandomPlan {
  std::uint64_t seed = 0;
  int trials = 2;
};

}  // namespace segre
