#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umpf/interval.h"
#include "umpf/polynomial.h"

namespace umpf {

/// Sturm chain p, p', -rem(p, p'), ... of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);

  int variations_at(const Rational& x) const;
  int variations_at_infinity() const;
  /// Distinct roots in (a, b]; an empty b means +infinity.
  int count_roots(const Rational& a, const std::optional<Rational>& b) const;

  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// A real algebraic number: either an exact rational, or the unique root of a
/// squarefree rational polynomial inside an open isolating interval whose ends
/// are not roots. Construction via isolated() detects rational roots, so a
/// non-rational instance is genuinely irrational.
class AlgebraicNumber {
 public:
  static AlgebraicNumber rational(const Rational& value);
  /// `squarefree` has exactly one root in (lo, hi) and none at lo or hi.
  static AlgebraicNumber isolated(const Polynomial& squarefree, const Rational& lo,
                                  const Rational& hi);

  bool is_rational() const { return exact_; }
  /// Precondition: is_rational().
  const Rational& value() const;
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  const Polynomial& defining_polynomial() const { return poly_; }

  /// Halves the isolating interval. No-op on rationals.
  void refine();
  void refine_below(const Rational& width);

  /// sign(this - r)
  int compare(const Rational& r) const;
  /// sign(this - other). Equal irrationals are detected through a common factor.
  int compare(const AlgebraicNumber& other) const;
  /// Exact sign of p at this number.
  int sign_of(const Polynomial& p) const;
  /// Midpoint of the isolating interval (the value when rational).
  Rational approximation() const;

  std::string to_string() const;

 private:
  AlgebraicNumber() = default;
  Polynomial poly_;
  Rational lo_, hi_;
  bool exact_ = false;
};

/// Distinct real roots of p strictly inside `interval`, ascending. The zero
/// polynomial has no isolated roots (callers test is_zero() first).
std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p, const Interval& interval);

/// `count` rationals strictly between `left` and `right` (right empty means
/// +infinity), ascending, chosen as simple as possible. Requires left < right.
std::vector<Rational> rationals_between(AlgebraicNumber left,
                                        std::optional<AlgebraicNumber> right, int count);

/// Exact sign classification of a polynomial over the interior of an
/// interval (a point interval classifies the value at the point).
struct SignSummary {
  enum class Kind { kPositive, kNegative, kZero, kMixed };

  Kind kind = Kind::kZero;
  Interval interval;
  /// Distinct interior roots, ascending; nonempty iff kind == kMixed.
  std::vector<AlgebraicNumber> roots;
  /// Sign on each open piece between consecutive roots (roots.size() + 1).
  std::vector<int> piece_signs;

  bool nonnegative() const;
  bool nonpositive() const;
  /// Index of the first piece with the given sign, if any.
  std::optional<size_t> first_piece_with_sign(int s) const;
  /// `count` rationals strictly inside piece k, ascending.
  std::vector<Rational> points_in_piece(size_t k, int count) const;
};

SignSummary poly_sign_on_interval(const Polynomial& p, const Interval& interval);

std::string to_string(SignSummary::Kind kind);

}  // namespace umpf
