#pragma once

#include <cstdint>

namespace blockfact {

/// SplitMix64: tiny deterministic generator for the seeded idempotent scans.
/// Fixed algorithm so identical seeds give identical scans on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi], inclusive.
  int in_range(int lo, int hi) {
    return lo + int(next() % std::uint64_t(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over a byte string; used for report fingerprints.
std::uint64_t fnv1a(const void* data, std::size_t len);

}  // namespace blockfact
