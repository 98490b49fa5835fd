#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace paveforge {

// Deterministic random source. mt19937_64 raw output is fixed by the C++
// standard, and the bounded draw below avoids std::uniform_int_distribution,
// whose output is implementation-defined. Same seed, same stream, everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Lemire multiply-shift mapping of a 64-bit draw onto [0, n).
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // 53-bit mantissa draw in [0, 1).
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace paveforge
