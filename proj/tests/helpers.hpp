#pragma once

// Shared generators for the property-style tests. Everything is seeded
// explicitly so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "pbasis/rational.hpp"
#include "pbasis/vec.hpp"

namespace testutil {

using Rng = std::mt19937;

inline int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random integer in [lo, hi] \ {0}.
inline int random_nonzero_int(Rng& rng, int lo, int hi) {
  for (;;) {
    const int v = random_int(rng, lo, hi);
    if (v != 0) return v;
  }
}

/// Random rational with numerator in [-num_mag, num_mag] and denominator
/// in [1, den_mag].
inline pbasis::Rational random_rational(Rng& rng, int num_mag, int den_mag) {
  return pbasis::rat(random_int(rng, -num_mag, num_mag), random_int(rng, 1, den_mag));
}

/// Random strictly positive rational.
inline pbasis::Rational random_positive_rational(Rng& rng, int num_mag, int den_mag) {
  return pbasis::rat(random_int(rng, 1, num_mag), random_int(rng, 1, den_mag));
}

inline pbasis::Vec random_int_vec(Rng& rng, std::size_t dim, int mag) {
  pbasis::Vec v = pbasis::zero_vec(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_int(rng, -mag, mag);
  return v;
}

inline pbasis::Vec random_rational_vec(Rng& rng, std::size_t dim, int num_mag, int den_mag) {
  pbasis::Vec v = pbasis::zero_vec(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng, num_mag, den_mag);
  return v;
}

/// Random nonzero rational vector.
inline pbasis::Vec random_nonzero_rational_vec(Rng& rng, std::size_t dim, int num_mag,
                                               int den_mag) {
  for (;;) {
    pbasis::Vec v = random_rational_vec(rng, dim, num_mag, den_mag);
    if (!v.is_zero()) return v;
  }
}

inline pbasis::VecSet random_int_vecset(Rng& rng, std::size_t dim, std::size_t count, int mag) {
  pbasis::VecSet set(dim);
  for (std::size_t i = 0; i < count; ++i) set.push_back(random_int_vec(rng, dim, mag));
  return set;
}

/// Binomial coefficient by Pascal recursion; small arguments only.
inline std::uint64_t binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

}  // namespace testutil
