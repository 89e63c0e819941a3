#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random streams. A stream is keyed by
// (master seed, replication index, purpose tag); draw i is a hash of
// (key, i), so results do not depend on thread scheduling or on how
// replications are distributed across workers.

namespace hetnet::rng {

enum class Purpose : std::uint64_t {
  kStationCount = 1,
  kPositions = 2,
  kMarks = 3,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Stream {
 public:
  Stream(std::uint64_t master_seed, std::uint64_t replication,
         Purpose purpose)
      : key_(splitmix64(splitmix64(splitmix64(master_seed) ^ replication) ^
                        static_cast<std::uint64_t>(purpose))) {}

  std::uint64_t next_u64() { return splitmix64(key_ ^ splitmix64(counter_++)); }

  // Uniform on (0, 1): never returns 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms per
  // draw (the second Box-Muller variate is discarded so the draw count
  // stays fixed).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double exponential() { return -std::log(uniform()); }

  // Poisson(mean). Inversion-by-multiplication for small means, PTRS
  // transformed-rejection for large ones.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hetnet::rng
