// Seedable random stream with a pinned algorithm.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Real and bounded-integer draws are derived here rather than via
// <random> distributions, whose algorithms are implementation-defined, so a
// given seed yields the same draws with every standard library.

#ifndef BP2D_RANDOM_H_
#define BP2D_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace bp2d {

class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound). bound must be >= 1.
  uint64_t below(uint64_t bound);

  // Uniform on [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

  // Independent stream for a sub-task; depends only on (seed, task).
  static RandomStream derive(uint64_t master_seed, uint64_t task);

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// splitmix64 finaliser.
uint64_t mix64(uint64_t value);

// FNV-1a, used to turn instance names into stable task ids.
uint64_t stable_hash(std::string_view text);

}  // namespace bp2d

#endif  // BP2D_RANDOM_H_
