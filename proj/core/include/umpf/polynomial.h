#pragma once

#include <string>
#include <utility>
#include <vector>

#include "umpf/rational.h"

namespace umpf {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(const Rational& constant);  // NOLINT
  Polynomial(long constant);             // NOLINT

  static Polynomial x();
  /// a + b*x
  static Polynomial linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(int i) const;
  /// Precondition: !is_zero().
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  /// Sign of p(x) as x -> +infinity.
  int sign_at_infinity() const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Scaled to integer coefficients with content 1 and positive leading term.
  std::vector<Integer> primitive_integer_coefficients() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Polynomial pow(unsigned exponent) const;

  /// Euclidean division; returns {quotient, remainder}. Throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Human-readable form in x, e.g. "x^2 - 1/2*x + 3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), made monic; the zero polynomial maps to itself.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace umpf
