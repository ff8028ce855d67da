#ifndef REPDYN_RNG_HPP
#define REPDYN_RNG_HPP

#include <complex>
#include <cstdint>

namespace repdyn {

/// Counter-based generator (splitmix64 finalizer). Output is a pure function
/// of (seed, stream, counter), so independent streams keyed by sample index
/// reproduce identically regardless of evaluation order or worker count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed) ^ (0xa0761d6478bd642full * (stream + 1)))) {}

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  std::complex<double> next_complex(double amplitude = 1.0) {
    double re = amplitude * next_symmetric();
    double im = amplitude * next_symmetric();
    return {re, im};
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace repdyn

#endif
