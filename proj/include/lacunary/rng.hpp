#ifndef LACUNARY_RNG_HPP
#define LACUNARY_RNG_HPP

#include <cstdint>

namespace lacunary {

/// Counter-based generator: the i-th draw of stream s under seed k is a pure
/// function mix(k, s, i), so streams can be split and replayed independently.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t at(std::uint64_t counter) const {
    return mix(mix(seed_ ^ mix(stream_ + 0x632be59bd9b4e019ULL)) + counter);
  }

  std::uint64_t next() { return at(counter_++); }

  /// Independent child stream; does not advance this generator.
  CounterRng split(std::uint64_t child) const { return CounterRng(seed_, mix(stream_ * 0x2545f4914f6cdd1dULL + child + 1)); }

  /// Uniform double in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace lacunary

#endif  // LACUNARY_RNG_HPP
