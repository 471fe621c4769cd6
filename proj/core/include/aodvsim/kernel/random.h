#ifndef AODVSIM_KERNEL_RANDOM_H
#define AODVSIM_KERNEL_RANDOM_H

#include <cstdint>
#include <random>

namespace aodvsim {

/// Seeded random source.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Real-valued draws are derived from the raw 64-bit output here
/// rather than through std::uniform_real_distribution (whose algorithm is
/// implementation-defined), so a given seed yields the same draws on every
/// platform and standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Raw 64-bit draw.
  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) using the top 53 bits of one draw.
  double unit();

  /// Uniform in [lo, hi]. Throws std::invalid_argument if lo > hi.
  double uniform(double lo, double hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace aodvsim

#endif  // AODVSIM_KERNEL_RANDOM_H
