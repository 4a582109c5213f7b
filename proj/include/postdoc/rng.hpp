#pragma once

#include <cstdint>
#include <vector>

namespace postdoc {

// splitmix64: tiny, seedable, and stable across platforms. std::shuffle's
// algorithm is implementation-defined, and reports promise bitwise
// reproducibility, so the shuffle is spelled out here.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  uint64_t below(uint64_t bound) { return next() % bound; }

  double unit() { return (next() >> 11) * 0x1.0p-53; }  // [0,1)
};

template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    const size_t j = (size_t)rng.below(i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace postdoc
