#include "umpf/interval.h"

namespace umpf {

bool Interval::empty() const {
  if (!hi) return false;
  int c = cmp(lo, *hi);
  if (c > 0) return true;
  if (c == 0) return !(lo_closed && hi_closed);
  return false;
}

bool Interval::contains(const Rational& x) const {
  int c = cmp(x, lo);
  if (c < 0 || (c == 0 && !lo_closed)) return false;
  if (!hi) return true;
  c = cmp(x, *hi);
  return c < 0 || (c == 0 && hi_closed);
}

Rational Interval::sample() const {
  if (is_point()) return lo;
  return simplest_rational_in(lo, false, hi, false);
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  int c = cmp(a.lo, b.lo);
  if (c > 0) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (c < 0) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (!a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else if (!b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else {
    int d = cmp(*a.hi, *b.hi);
    if (d < 0) {
      r.hi = a.hi;
      r.hi_closed = a.hi_closed;
    } else if (d > 0) {
      r.hi = b.hi;
      r.hi_closed = b.hi_closed;
    } else {
      r.hi = a.hi;
      r.hi_closed = a.hi_closed && b.hi_closed;
    }
  }
  return r;
}

std::string to_string(const Interval& i) {
  std::string s;
  s += i.lo_closed ? "[" : "(";
  s += to_string(i.lo);
  s += ", ";
  s += i.hi ? to_string(*i.hi) : std::string("inf");
  s += (i.hi && i.hi_closed) ? "]" : ")";
  return s;
}

}  // namespace umpf
