#pragma once

#include <cstdint>
#include <string_view>

namespace gmssc {

// SplitMix64 (Steele/Lea/Flood). Small, splittable, identical output on every
// platform, which keeps experiment streams byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0,1): 53-bit mantissa, zero remapped.
  double next_double() {
    for (;;) {
      double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  // Uniform integer in [0, bound), bound >= 1. Lemire multiply-shift; the
  // tiny modulo bias is irrelevant at desk scale and determinism matters more.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bernoulli(double p) { return next_double() <= p; }

 private:
  std::uint64_t state_;
};

// One SplitMix64 step used as a 64-bit mixer for seed derivation.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Per-trial stream seed: independent of other algorithms and trial counts.
inline std::uint64_t trial_seed(std::uint64_t master, std::string_view alg_tag,
                                std::uint64_t trial_index) {
  return mix_seed(mix_seed(master, hash_tag(alg_tag)), trial_index);
}

}  // namespace gmssc
