#pragma once

#include <cstdint>
#include <random>

#include "bigyro/matcore.hpp"

namespace bigyro {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Engine for trial `counter` of a run seeded with `master`. The stream for a
/// trial depends only on (master, counter), so reports do not depend on
/// evaluation order.
inline std::mt19937_64 trial_engine(std::uint64_t master, std::uint64_t counter) {
  return std::mt19937_64(mix_seed(mix_seed(master) ^ mix_seed(counter + 1)));
}

/// Matrix with i.i.d. entries uniform in [lo, hi].
Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double lo = -2.0,
                  double hi = 2.0);

/// Haar-ish random element of SO(n): Gram-Schmidt on a Gaussian matrix,
/// last column flipped if needed so the determinant is +1.
Mat random_rotation(std::mt19937_64& rng, std::size_t n);

}  // namespace bigyro
