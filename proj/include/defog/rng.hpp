#pragma once

#include <cstdint>

namespace defog {

// SplitMix64 (Steele, Lea, Flood 2014). Single 64-bit word of state, so
// streams are trivially reproducible across platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be > 0; modulo bias is irrelevant at
  // the stream lengths used here.
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // Uniform integer in [lo, hi] inclusive.
  int64_t next_range(int64_t lo, int64_t hi) {
    return lo + int64_t(next_below(uint64_t(hi - lo + 1)));
  }

  // Uniform real in [lo, hi).
  double next_real(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Weighted index draw; weights need not be normalized.
  int next_weighted(const double* weights, int n) {
    double total = 0;
    for (int i = 0; i < n; ++i) total += weights[i];
    double x = next_double() * total;
    for (int i = 0; i < n; ++i) {
      x -= weights[i];
      if (x < 0) return i;
    }
    return n - 1;
  }

  // Derives an independent stream for substream `index` (per-game seeds etc).
  static uint64_t derive(uint64_t seed, uint64_t index) {
    SplitMix64 r(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    return r.next_u64();
  }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace defog
