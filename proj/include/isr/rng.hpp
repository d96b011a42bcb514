#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace isr {

// SplitMix64. Chosen over std::mt19937 + std distributions because the
// standard distributions are implementation-defined: identical seeds give
// different streams across standard libraries, which would break the
// bit-reproducible CSV contract. Everything here is fully specified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; unbiased for every n ≥ 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  long long uniform_int(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in (0, 1]: 53 random bits, never exactly zero.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box–Muller (pair-cached).
  double gaussian() {
    if (cached_) {
      double v = *cached_;
      cached_.reset();
      return v;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  std::optional<double> cached_;
};

// Derive an independent stream for a numbered trial/cell from one master
// seed, so parallel execution can never change results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  Rng g(master ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  return g.next_u64();
}

}  // namespace isr
