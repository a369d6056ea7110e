#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lehmer {

// SplitMix64 step; used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-run stream seed derived from (master seed, run index).
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) {
  std::uint64_t s = master_seed;
  std::uint64_t a = splitmix64(s);
  s ^= run_index;
  return a ^ splitmix64(s);
}

// Random stream. Wraps std::mt19937_64 (fully specified by the standard,
// so sequences are identical across platforms) and provides bias-free
// bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, k). k >= 1.
  std::uint64_t bounded(std::uint64_t k) {
    // Lemire's multiply-shift with rejection.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * k;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < k) {
      const std::uint64_t threshold = (0 - k) % k;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * k;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform integer in [lo, hi], inclusive.
  long long uniform_int(long long lo, long long hi) {
    return lo + static_cast<long long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // Poisson with mean 1, by sequential inversion of the CDF.
  int poisson_one() {
    const double u = next_double();
    double p = std::exp(-1.0);
    double cum = p;
    int k = 0;
    while (u >= cum) {
      ++k;
      p /= k;
      cum += p;
      if (k > 170) break;  // cum has reached 1 within double precision
    }
    return k;
  }

  // Number of failures before the first success in Bernoulli(p) trials.
  std::uint64_t geometric_failures(double p) {
    const double u = next_double();
    if (p >= 1.0) return 0;
    return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lehmer
