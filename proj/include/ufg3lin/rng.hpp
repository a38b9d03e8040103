// Seeded, splittable random generator.
//
// All randomness in the project flows through Rng so that runs are
// reproducible from a single 64-bit seed. Streams are split by labeled
// derivation (hash of parent seed and label), and bounded draws avoid
// std::uniform_int_distribution so results do not depend on the standard
// library implementation.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ufg3lin {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a over a label, mixed with the parent seed.
inline uint64_t derive_seed(uint64_t parent, std::string_view label) {
  uint64_t h = 0xcbf29ce484222325ULL ^ parent;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  uint64_t s = h;
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, bound) by rejection; bound > 0.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  Rng split(std::string_view label) { return Rng(derive_seed(state_, label)); }

 private:
  uint64_t state_;
};

// Deterministic value from (seed, key bytes); used by lazy folded tables so
// concurrent first-touch reads agree.
inline uint64_t hash_key(uint64_t seed, const unsigned char* data, size_t n) {
  uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ULL;
  }
  uint64_t s = h;
  return splitmix64(s);
}

}  // namespace ufg3lin
