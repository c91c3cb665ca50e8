#ifndef BREMIT_RNG_HPP
#define BREMIT_RNG_HPP

#include <cstdint>

namespace bremit {

/// SplitMix64: used to expand one 64-bit seed into independent stream seeds
/// and to initialize the main generator state.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// xoshiro256++ seeded through SplitMix64. Deterministic for a given seed;
/// substreams derived from one seed via derive() are independent in practice
/// (distinct SplitMix64 expansions).
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in (0, 1]; never returns 0 so log() is safe.
  double uniform();
  /// Independent generator for a named substream of the same seed.
  static Xoshiro256pp derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t s_[4];
};

/// Standard normal deviates via Box-Muller (pair-cached). Deterministic,
/// independent of any standard-library distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(Xoshiro256pp rng) : rng_(rng) {}
  GaussianStream(std::uint64_t seed, std::uint64_t stream)
      : rng_(Xoshiro256pp::derive(seed, stream)) {}
  double next();

 private:
  Xoshiro256pp rng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace bremit

#endif
