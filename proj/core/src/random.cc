#include "bp2d/random.h"

#include "bp2d/model.h"

namespace bp2d {
namespace {
__extension__ typedef unsigned __int128 uint128;
}  // namespace

uint64_t RandomStream::below(uint64_t bound) {
  if (bound == 0) throw ContractViolation("RandomStream::below: bound is 0");
  // Lemire's nearly-divisionless method.
  uint128 product =
      static_cast<uint128>(next_u64()) * bound;
  uint64_t low = static_cast<uint64_t>(product);
  if (low < bound) {
    const uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<uint128>(next_u64()) * bound;
      low = static_cast<uint64_t>(product);
    }
  }
  return static_cast<uint64_t>(product >> 64);
}

int RandomStream::uniform_int(int lo, int hi) {
  if (hi < lo) throw ContractViolation("RandomStream::uniform_int: hi < lo");
  const uint64_t span = static_cast<uint64_t>(int64_t{hi} - lo) + 1;
  return static_cast<int>(lo + static_cast<int64_t>(below(span)));
}

uint64_t mix64(uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

RandomStream RandomStream::derive(uint64_t master_seed, uint64_t task) {
  return RandomStream(mix64(mix64(master_seed) ^ mix64(task + 1)));
}

uint64_t stable_hash(std::string_view text) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace bp2d
