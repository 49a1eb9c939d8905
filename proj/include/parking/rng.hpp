// Reproducible random streams for the parking simulations.
//
// Stream definition (portable across implementations):
//   * engine: MT19937-64 seeded with the 64-bit seed (reference init_genrand64),
//     which is std::mt19937_64(seed);
//   * uniform choice in 1..n: draw x; reject while x < (2^64 - n) mod n;
//     return x mod n + 1;
//   * block sub-seed: splitmix64(seed ^ splitmix64(block + 1)), where
//     splitmix64(z) adds 0x9E3779B97F4A7C15 and applies the standard finalizer.
#pragma once

#include <cstdint>
#include <random>

namespace parking {

struct Seed {
  std::uint64_t value = 0;
};

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr Seed derive_seed(Seed seed, std::uint64_t block) {
  return Seed{splitmix64(seed.value ^ splitmix64(block + 1))};
}

class ChoiceStream {
public:
  explicit ChoiceStream(Seed seed) : engine_(seed.value) {}

  /// Uniform integer in [1, n]; n >= 1.
  std::int64_t next(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x = engine_();
    while (x < threshold) x = engine_();
    return static_cast<std::int64_t>(x % n) + 1;
  }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace parking
