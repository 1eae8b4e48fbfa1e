#pragma once

#include <cstdint>
#include <string_view>

#include "liestab/matrix.hpp"

namespace liestab {

/// Seeded linear congruential generator.  Fixed 64-bit constants, so streams
/// are identical across platforms and runs; used for the congruence
/// scrambles and randomized invariance trials.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {
    next();
    next();
  }

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    // Finalizing mixer; the raw low bits of an LCG state have short periods.
    std::uint64_t z = state_;
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
  }

  std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Uniform-ish field element; small integers over the rationals.
  Scalar scalar(const FieldSpec& f) {
    if (f.is_prime_field()) {
      return Scalar::from_int(f, static_cast<std::int64_t>(next_below(
                                     static_cast<std::uint64_t>(f.characteristic()))));
    }
    return Scalar::from_int(f, static_cast<std::int64_t>(next_below(5)) - 2);
  }

  Scalar nonzero_scalar(const FieldSpec& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  ExactMatrix matrix(std::size_t rows, std::size_t cols, const FieldSpec& f) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(f);
    return m;
  }

  /// Rejection-sampled invertible matrix.
  ExactMatrix invertible(std::size_t n, const FieldSpec& f) {
    for (;;) {
      ExactMatrix g = matrix(n, n, f);
      if (try_inverse(g)) return g;
    }
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace liestab
