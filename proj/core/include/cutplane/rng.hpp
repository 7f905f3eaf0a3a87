#pragma once

#include <cstdint>
#include <random>

#include "cutplane/linalg.hpp"

namespace cutplane {

// splitmix64 finalizer, used for seed mixing and hash-style priorities.
std::uint64_t mix64(std::uint64_t x);

// Seed for the substream owned by run `index` under a root seed. Distinct
// indices give statistically independent streams, and the derivation is a
// pure function so concurrent runs stay reproducible.
std::uint64_t substream_seed(std::uint64_t root, std::uint64_t index);

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the real-valued draws below are
// implemented by hand because std:: distributions are allowed to differ
// between standard libraries. Every draw consumes a fixed number of engine
// words, so call sequences replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; exactly two engine words per call, no cached spare.
  double gaussian();

  Vec gaussian_vec(std::size_t d);

  // Uniform direction on the unit sphere in R^d.
  Vec unit_sphere(std::size_t d);

  // Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cutplane
