#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace princebart {

// xoshiro256++ with splitmix64 seeding. The engine is fully specified here so
// that streams are reproducible across platforms and standard libraries.
class Rng {
 public:
  Rng() : Rng(0) {}

  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0, 1); safe as a quantile-function input.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), n >= 1. Bounded-rejection, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

// Deterministic stream derivation. Substreams are keyed by a label plus
// integer indices so that e.g. chain c and chain c+1 never share state, and
// interleaving of consumers inside one chain cannot perturb another stream.
struct RngSeed {
  std::uint64_t value = 0;

  RngSeed derive(std::string_view label, std::uint64_t a = 0,
                 std::uint64_t b = 0) const {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the label
    for (const char ch : label) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ull;
    }
    std::uint64_t x = value;
    Rng::splitmix64(x);
    x ^= h;
    Rng::splitmix64(x);
    x ^= a * 0x9e3779b97f4a7c15ull;
    Rng::splitmix64(x);
    x ^= b * 0xd1b54a32d192ed03ull;
    const std::uint64_t out = Rng::splitmix64(x);
    return RngSeed{out};
  }

  Rng make() const { return Rng(value); }
};

}  // namespace princebart
