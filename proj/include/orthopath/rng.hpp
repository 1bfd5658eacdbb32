#pragma once

#include <cmath>
#include <cstdint>

namespace orthopath {

// SplitMix64 (Steele/Lea/Flood). Single fixed algorithm used for every
// randomized computation in this project so that all experiments replay
// bit-for-bit from a 64-bit seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool bit() { return (next() >> 63) != 0; }

  // Standard normal via Box-Muller; second value cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform01();
    } while (u <= 0.0);
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(6.283185307179586476925287 * v);
    have_spare_ = true;
    return r * std::cos(6.283185307179586476925287 * v);
  }

 private:
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Derives an independent stream for a task index; used when trials run on
// several threads so results do not depend on the thread count.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
  mix.next();
  return mix;
}

}  // namespace orthopath
