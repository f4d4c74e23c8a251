#pragma once

#include <string>
#include <vector>

#include "umpf/interval.h"
#include "umpf/polynomial.h"
#include "umpf/rational.h"

namespace umpf {

inline constexpr int kMaxSegmentDegree = 8;

/// Quotient of two rational polynomials.
struct RationalFunction {
  Polynomial num;
  Polynomial den{1};

  Rational operator()(const Rational& x) const { return num(x) / den(x); }

  /// N'D - ND', which has the sign of the derivative wherever D != 0.
  Polynomial derivative_numerator() const;
  /// (N''D - ND'')D - 2D'(N'D - ND'), the numerator of f'' over D^3.
  Polynomial second_derivative_numerator() const;
  Rational derivative_at(const Rational& x) const;
  /// Limit as x -> +infinity from leading coefficients; throws when it is -infinity.
  ExtRational limit_at_infinity() const;
  /// Divides out gcd(N, D) and makes D monic.
  RationalFunction reduced() const;
  bool is_constant() const { return num.degree() <= 0 && den.degree() <= 0; }
  /// Value when is_constant().
  Rational constant_value() const;
  bool is_affine() const { return den.degree() == 0 && num.degree() <= 1; }
  /// Slope and intercept when is_affine().
  Rational slope() const { return num.coefficient(1) / den.coefficient(0); }
  Rational intercept() const { return num.coefficient(0) / den.coefficient(0); }

  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

struct Segment {
  Interval domain;
  RationalFunction formula;
};

enum class Side { kLeft, kRight };

/// f : [0, inf) -> [0, inf) given by rational formulas on a partition of the
/// half-line. Construction validates the partition, pole-freeness on every
/// segment closure, the degree cap and nonnegativity; violations throw the
/// FunctionError subclasses from errors.h tagged with the segment index.
class PiecewiseFunction {
 public:
  explicit PiecewiseFunction(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  size_t segment_index_at(const Rational& x) const;
  const Segment& segment_at(const Rational& x) const { return segments_[segment_index_at(x)]; }

  Rational operator()(const Rational& x) const;

  /// Distinct finite segment ends, ascending (always starts with 0).
  std::vector<Rational> knots() const;
  bool is_piecewise_affine() const;

  /// Round-trippable DSL text.
  std::string to_dsl() const;

 private:
  std::vector<Segment> segments_;
};

/// Exact value at x >= 0; throws OutOfDomain for negative x.
Rational evaluate(const PiecewiseFunction& f, const Rational& x);

/// One-sided limit at a finite x > 0 (left), finite x >= 0 (right), or at
/// +infinity (left side only). Throws OutOfDomain otherwise.
ExtRational one_sided_limit(const PiecewiseFunction& f, const ExtRational& x, Side side);

/// Index of the nondegenerate segment covering points just left / right of x.
size_t adjacent_segment(const PiecewiseFunction& f, const Rational& x, Side side);

}  // namespace umpf
