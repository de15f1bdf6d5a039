#ifndef RCF_RNG_HPP
#define RCF_RNG_HPP

#include <cstdint>

namespace rcf {

/// Deterministic, splittable random stream (xoshiro256++ seeded through
/// splitmix64). A stream is fully determined by (seed, stream index), so
/// Monte Carlo trials can be keyed by trial index and run in any order or
/// in parallel with reproducible results.
///
/// Satisfies UniformRandomBitGenerator, so it plugs into <random>
/// distributions where needed.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    // splitmix64 chain over the key; guarantees a non-zero state.
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
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

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// One fair bit.
  bool next_bit() { return ((*this)() >> 63) != 0; }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }
  std::uint64_t state_[4];
};

}  // namespace rcf

#endif
