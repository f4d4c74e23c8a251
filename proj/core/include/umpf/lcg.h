#pragma once

#include <cstdint>

#include "umpf/rational.h"

namespace umpf {

/// The fixed 64-bit linear congruential generator used by every seeded
/// routine, so fixtures reproduce across implementations.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// (1 + s mod 1000) / (1 + s' mod 100) from two successive states.
  Rational draw() {
    std::uint64_t s1 = next();
    std::uint64_t s2 = next();
    return make_rational(static_cast<long>(1 + s1 % 1000), static_cast<long>(1 + s2 % 100));
  }

  /// Uniform-ish index in [0, n).
  std::uint64_t below(std::uint64_t n) { return (next() >> 33) % n; }

 private:
  std::uint64_t state_;
};

}  // namespace umpf
