#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hlb {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Counter-based stream: the k-th draw is a pure function of (key, k), so a
/// substream split off by index is reproducible regardless of the order in
/// which substreams are consumed.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : key_(mix64(seed)) {}

  /// Independent child stream for a sub-task (start, restart, cell, ...).
  RandomStream split(std::uint64_t index) const { return RandomStream(key_ ^ mix64(index + 0x632be59bd9b4e019ULL)); }

  std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11U) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next_u64() % bound; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hlb
