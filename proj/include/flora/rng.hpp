#pragma once

#include <cstdint>
#include <string_view>

namespace flora {

/// splitmix64 step, used both as a generator stage and for seed mixing.
inline std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic stream: xoshiro256** seeded via splitmix64. All stochastic
/// choices in the pipeline draw from explicit Rng instances so that runs
/// are reproducible for a fixed seed on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto &w : s_) w = splitmix64(sm);
  }

  std::uint64_t next() {
    auto rotl = [](std::uint64_t v, int k) {
      return (v << k) | (v >> (64 - k));
    };
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform integer in [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling to avoid modulo bias.
    std::uint64_t limit = ~0ull - ~0ull % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long long>(v % span);
  }

  /// Uniform double in [0, 1).
  double uniform_real() { return (next() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

 private:
  std::uint64_t s_[4];
};

/// Derive an independent sub-stream seed from (seed, tag).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    splitmix64(h);
  }
  return splitmix64(h);
}

}  // namespace flora
