#pragma once

#include <cstdint>

#include "roldarp/core.hpp"

namespace roldarp {

/// Counter-based deterministic PRNG (SplitMix64). Identical seeds give
/// byte-identical draw sequences on every platform; bounded draws use plain
/// modulo.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

struct RandomSpec {
  int vertices = 5;
  int requests = 6;
  std::uint64_t seed = 0;
  int f = 6;
  long long T = 60;  // keep T a multiple of f so segment length is integral
  bool uniform = false;
  bool bipartite = false;
  Rational k{1, 2};  // bipartite min-edge factor
};

/// Seeded random instance: integer weights in [1, T/f] run through the
/// metric closure (bipartite instances draw cross weights in [ceil(kT/f),
/// T/f] instead and skip the closure), integer release times in [0, T],
/// revenues 1..10 or all 1 when uniform.
Instance gen_random(const RandomSpec& spec);

}  // namespace roldarp
