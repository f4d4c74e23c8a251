#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace umpf {

// Arbitrary-precision rational. gmp keeps results of arithmetic canonical;
// values built from raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" or a decimal literal such as "1.25" (taken as the
/// exact power-of-ten fraction). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

int sign(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// A rational or +infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : value_(value) {}                  // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// "inf" or to_string(value).
std::string to_string(const ExtRational& r);
/// Accepts "inf" in addition to parse_rational's forms.
ExtRational parse_ext_rational(std::string_view text);

/// Simplest rational (smallest denominator, then smallest magnitude numerator)
/// in the interval with the given ends. An empty `hi` means +infinity. The
/// interval must be nonempty and lie in [0, inf).
Rational simplest_rational_in(const Rational& lo, bool lo_closed,
                              const std::optional<Rational>& hi, bool hi_closed);

}  // namespace umpf
