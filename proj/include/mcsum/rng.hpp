#pragma once

#include <cstdint>
#include <random>

namespace mcsum {

// Seedable generator with a bit-stable output sequence. std::mt19937_64 is
// specified exactly by the standard, and the [0,1) conversion below avoids
// std::uniform_real_distribution, whose output is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0,bound). bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mcsum
