#pragma once

#include <cstdint>
#include <string>

namespace vdel {

// Counter-based SplitMix64: draw i of stream `seed` is mix(seed + (i+1)*gamma).
// Portable by construction; any language reproduces the same stream.
class Rng {
public:
  static constexpr const char* kAlgorithm = "splitmix64-counter";

  explicit Rng(uint64_t seed) : seed_(seed) {}

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t next() { return mix(seed_ + (++ctr_) * 0x9e3779b97f4a7c15ull); }

  // Uniform in [0, n) by rejection; n > 0.
  uint64_t below(uint64_t n) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do x = next();
    while (x >= lim);
    return x % n;
  }
  int range(int lo, int hi) { return lo + int(below(uint64_t(hi - lo + 1))); } // inclusive
  // Bernoulli(p/q) exactly.
  bool chance(uint64_t p, uint64_t q) { return below(q) < p; }

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return ctr_; }

private:
  uint64_t seed_;
  uint64_t ctr_ = 0;
};

} // namespace vdel
