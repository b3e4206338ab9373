#pragma once

#include <cstdint>
#include <random>

#include "su11/gauss.hpp"

namespace su11 {

/// Deterministic RNG for seeded checks. Draws go through the raw engine
/// stream (no std distributions) so sequences are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [lo, hi], lo <= hi.
  long int_in(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Nonzero integer in [-mag, mag].
  long nonzero_int(long mag) {
    long v = int_in(1, mag);
    return next() % 2 == 0 ? v : -v;
  }

  Rational rational(long num_mag, long den_mag) {
    return Rational(int_in(-num_mag, num_mag), int_in(1, den_mag));
  }

  Rational nonzero_rational(long num_mag, long den_mag) {
    return Rational(nonzero_int(num_mag), int_in(1, den_mag));
  }

  Rational positive_rational(long num_mag, long den_mag) {
    return Rational(int_in(1, num_mag), int_in(1, den_mag));
  }

  GaussScalar gauss(long num_mag, long den_mag) {
    Rational re = rational(num_mag, den_mag);
    Rational im = rational(num_mag, den_mag);
    return GaussScalar(std::move(re), std::move(im));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace su11
