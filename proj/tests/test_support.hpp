#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ward/operators.hpp"
#include "ward/series.hpp"

namespace ward::testsupport {

// Deterministic generator for property-style tests. Every suite seeds its
// own Rng so failures reproduce from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g_);
  }

  Rat rat(long num_range = 9, long den_range = 4) {
    return Rat(integer(-num_range, num_range), integer(1, den_range));
  }

  Rat nonzero_rat(long num_range = 9, long den_range = 4) {
    while (true) {
      Rat r = rat(num_range, den_range);
      if (!r.is_zero()) return r;
    }
  }

  Series series(int trunc, long num_range = 9) {
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(trunc) + 1);
    for (int k = 0; k <= trunc; ++k) v.push_back(rat(num_range));
    return Series(std::move(v));
  }

  // Series with resolved order exactly `ord` (nonzero coefficient there).
  Series series_with_order(int ord, int trunc, long num_range = 9) {
    std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
    v[static_cast<std::size_t>(ord)] = nonzero_rat(num_range);
    for (int k = ord + 1; k <= trunc; ++k)
      v[static_cast<std::size_t>(k)] = rat(num_range);
    return Series(std::move(v));
  }

  HSeries hseries(int trunc, long num_range = 4) {
    std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
    for (int k = 1; k <= trunc; ++k)
      v[static_cast<std::size_t>(k)] = nonzero_rat(num_range);
    return HSeries(Series(std::move(v)));
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace ward::testsupport
