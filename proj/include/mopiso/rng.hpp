#pragma once

#include <cstdint>

namespace mopiso {

// splitmix64: state advances by the golden-ratio increment, output is the
// mixed state. Documented in the README so runs can be reproduced elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t cut = (0 - bound) % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r < cut);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mopiso
