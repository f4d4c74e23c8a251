#pragma once

#include <optional>

#include "umpf/piecewise.h"
#include "umpf/real_roots.h"

namespace umpf {

/// Where an extremal value of a piecewise function is attained or approached.
/// Limits remember a rational `inner` point of the open piece they are
/// approached through, so rational approach sequences can be generated.
struct Location {
  enum class Kind { kPoint, kLeftLimit, kRightLimit, kInfinity, kAlgebraic };

  Kind kind = Kind::kPoint;
  Rational x;      // the point, or the limit point
  Rational inner;  // for limits: a point inside the approached piece
  std::optional<AlgebraicNumber> algebraic;

  static Location point(const Rational& x) { return {Kind::kPoint, x, x, std::nullopt}; }
  static Location left_limit(const Rational& x, const Rational& inner) {
    return {Kind::kLeftLimit, x, inner, std::nullopt};
  }
  static Location right_limit(const Rational& x, const Rational& inner) {
    return {Kind::kRightLimit, x, inner, std::nullopt};
  }
  static Location infinity(const Rational& inner) {
    return {Kind::kInfinity, inner, inner, std::nullopt};
  }
  static Location at(const AlgebraicNumber& a);

  bool attained() const { return kind == Kind::kPoint || kind == Kind::kAlgebraic; }
};

/// k-th rational point of a sequence converging to the location (constant for
/// points). Limits halve the distance to the limit point at each step; the
/// infinity sequence doubles.
Rational approach(const Location& loc, int k);

struct ExtremaResult {
  ExtRational inf;
  bool inf_attained = false;
  ExtRational sup;
  bool sup_attained = false;
  Location inf_at;
  Location sup_at;
};

/// Exact infimum and supremum of f over I. Extremal values attained only at
/// irrational critical points cannot be represented and raise
/// IrrationalExtremumUnresolved.
ExtremaResult extrema_on(const PiecewiseFunction& f, const Interval& interval);

/// The interior of each nonpoint segment split at the roots of the
/// derivative numerator; pieces on which the formula is monotone.
struct MonotonePiece {
  size_t segment;
  std::optional<AlgebraicNumber> left;   // empty: segment lower end
  std::optional<AlgebraicNumber> right;  // empty: segment upper end (maybe infinity)
  int direction;                         // +1 nondecreasing, -1 decreasing
  Rational inner;                        // a rational strictly inside
};

std::vector<MonotonePiece> monotone_pieces(const PiecewiseFunction& f, size_t segment);

}  // namespace umpf
