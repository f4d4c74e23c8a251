#include "umpf/rational.h"

#include <cctype>
#include <stdexcept>

namespace umpf {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = make_rational(parse_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = (whole.empty() ? Integer(0) : parse_integer(whole)) * scale +
                  (frac.empty() ? Integer(0) : parse_integer(frac));
    result = make_rational(num, scale);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    result = Rational(parse_integer(s));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& r) { return r.get_str(); }

int sign(const Rational& r) { return sgn(r); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("ExtRational::value() on infinity");
  return value_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const ExtRational& r) {
  return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf" || s == "+inf") return ExtRational::infinity();
  return ExtRational(parse_rational(s));
}

namespace {

// Simplest rational strictly inside (a, b); b empty means +infinity; a >= 0.
Rational simplest_open(const Rational& a, const std::optional<Rational>& b) {
  Integer fa = floor(a);
  Rational next(fa + 1);
  if (!b || next < *b) return next;
  // (a, b) lies inside [fa, fa + 1]; recurse on the reciprocal of the
  // fractional part.
  Rational x = a - Rational(fa);
  Rational y = *b - Rational(fa);
  std::optional<Rational> upper;
  if (x != 0) upper = Rational(1 / x);
  Rational inner = simplest_open(Rational(1 / y), upper);
  return Rational(fa) + Rational(1 / inner);
}

bool simpler(const Rational& a, const Rational& b) {
  int c = cmp(a.get_den(), b.get_den());
  if (c != 0) return c < 0;
  return abs(a.get_num()) < abs(b.get_num());
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, bool lo_closed,
                              const std::optional<Rational>& hi, bool hi_closed) {
  if (hi && *hi == lo) {
    if (!(lo_closed && hi_closed)) throw std::invalid_argument("empty interval");
    return lo;
  }
  if (hi && *hi < lo) throw std::invalid_argument("empty interval");
  Rational best = simplest_open(lo, hi);
  if (lo_closed && simpler(lo, best)) best = lo;
  if (hi && hi_closed && simpler(*hi, best)) best = *hi;
  return best;
}

}  // namespace umpf
