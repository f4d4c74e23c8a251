#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "umpf/dsl.h"
#include "umpf/lcg.h"
#include "umpf/piecewise.h"
#include "umpf/rational.h"

namespace umpf::test {

std::filesystem::path functions_dir();
std::filesystem::path data_dir();

PiecewiseFunction fixture(const std::string& stem);
std::vector<std::string> fixture_names();

Rational q(long num, long den = 1);

/// DSL text for a function equal to x on [0, 1] and c on (1, inf).
std::string c_variant_source(const Rational& c);

struct AffineOptions {
  bool amenable_bias = true;  // f(0) = 0 and positive values most of the time
  int max_pieces = 4;
  bool increasing = false;  // nondecreasing values, upward jumps only
};

/// A seeded random piecewise-affine function in DSL form. Knots are small
/// rationals, closedness at each knot is random and jumps are allowed.
std::string random_affine_source(std::uint64_t seed, const AffineOptions& options = {});

/// Random rational in [0, bound] with denominator up to 12.
Rational random_point(Lcg& rng, long bound);

/// Brute force: f(a) <= f(b) + f(c) over all rotations of a triangle triplet.
bool image_is_triangle(const PiecewiseFunction& f, const Rational& a, const Rational& b,
                       const Rational& c);

/// Random (a, b, c) with each side at most the sum of the other two.
void random_triangle(Lcg& rng, long bound, Rational& a, Rational& b, Rational& c);

}  // namespace umpf::test
