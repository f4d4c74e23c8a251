#pragma once

#include <optional>
#include <string>

#include "umpf/rational.h"

namespace umpf {

/// Interval of the half-line with independently open or closed ends. An
/// empty `hi` stands for +infinity, which is always open. A degenerate
/// interval [a, a] (both ends closed) is a single point.
struct Interval {
  Rational lo = 0;
  bool lo_closed = true;
  std::optional<Rational> hi;
  bool hi_closed = false;

  static Interval closed(const Rational& a, const Rational& b) { return {a, true, b, true}; }
  static Interval open(const Rational& a, const Rational& b) { return {a, false, b, false}; }
  static Interval point(const Rational& a) { return {a, true, a, true}; }
  /// [a, inf) or (a, inf).
  static Interval ray(const Rational& a, bool closed) { return {a, closed, std::nullopt, false}; }
  /// (a, b) or (a, inf).
  static Interval open_between(const Rational& a, const std::optional<Rational>& b) {
    return {a, false, b, false};
  }

  bool bounded() const { return hi.has_value(); }
  bool is_point() const { return hi && *hi == lo; }
  bool empty() const;
  bool contains(const Rational& x) const;
  ExtRational upper() const { return hi ? ExtRational(*hi) : ExtRational::infinity(); }
  /// The open interval with the same ends.
  Interval interior() const { return {lo, false, hi, false}; }
  /// Some rational strictly inside a nonpoint interval, or the point itself.
  Rational sample() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intersection; may be empty().
Interval intersect(const Interval& a, const Interval& b);

/// "[0, 1)" style rendering; "inf" for an unbounded end.
std::string to_string(const Interval& i);

}  // namespace umpf
