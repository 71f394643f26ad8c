#pragma once

#include <cstdint>

namespace stathyp {

// Deterministic PRNG used everywhere randomness is needed. The engine and the
// uniform-integer reduction are pinned here (not the standard library's
// unspecified distributions) so that a (seed, stream) pair reproduces the same
// values on every platform and for every thread count.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  // Independent stream for a (seed, index) pair; used for per-pair sampling.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
    return Rng(splitmix64(sm));
  }

  std::uint64_t next() {  // xoshiro256**
    std::uint64_t r = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return r;
  }

  // Uniform in [0, bound) by rejection; exact, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() >> 63; }

  double unit() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace stathyp
