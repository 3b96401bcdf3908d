#pragma once

#include <cstdint>
#include <vector>

#include "orbittie/perm.hpp"

namespace orbittie {

/// Deterministic generator (splitmix64) for seeded property checks. Pinned
/// here rather than relying on <random> distributions so sequences are
/// identical across standard libraries.
class DetRng {
public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// uniform-ish draw in [0, n); modulo bias is irrelevant at desk scale
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  bool coin() { return (next() & 1u) != 0; }

private:
  std::uint64_t state_;
};

inline Permutation random_permutation(DetRng& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(images[static_cast<std::size_t>(i)],
              images[static_cast<std::size_t>(rng.below(i + 1))]);
  }
  return Permutation(std::move(images));
}

}  // namespace orbittie
