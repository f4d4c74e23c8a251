#include "umpf/piecewise.h"

#include <algorithm>
#include <sstream>

#include "umpf/errors.h"
#include "umpf/real_roots.h"

namespace umpf {

Polynomial RationalFunction::derivative_numerator() const {
  return num.derivative() * den - num * den.derivative();
}

Polynomial RationalFunction::second_derivative_numerator() const {
  Polynomial d1 = den.derivative();
  Polynomial d2 = d1.derivative();
  Polynomial n1 = num.derivative();
  Polynomial n2 = n1.derivative();
  return (n2 * den - num * d2) * den - Rational(2) * d1 * (n1 * den - num * d1);
}

Rational RationalFunction::derivative_at(const Rational& x) const {
  Rational d = den(x);
  return derivative_numerator()(x) / (d * d);
}

ExtRational RationalFunction::limit_at_infinity() const {
  if (num.is_zero()) return Rational(0);
  int dn = num.degree();
  int dd = den.degree();
  if (dn < dd) return Rational(0);
  Rational ratio = num.leading() / den.leading();
  if (dn == dd) return ratio;
  if (sgn(ratio) < 0) throw OutOfDomain("formula tends to -infinity");
  return ExtRational::infinity();
}

RationalFunction RationalFunction::reduced() const {
  if (num.is_zero()) return {Polynomial(), Polynomial(1)};
  Polynomial g = gcd(num, den);
  RationalFunction r{num.divmod(g).first, den.divmod(g).first};
  Rational lead = r.den.leading();
  r.num *= Rational(1 / lead);
  r.den *= Rational(1 / lead);
  return r;
}

Rational RationalFunction::constant_value() const {
  return num.coefficient(0) / den.coefficient(0);
}

std::string RationalFunction::to_string() const {
  if (den == Polynomial(1)) return num.to_string();
  return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

namespace {

void validate_segment(Segment& s, size_t index) {
  const Interval& d = s.domain;
  if (sgn(d.lo) < 0) throw DomainGapError("segment starts below 0", index);
  if (d.empty()) throw DomainGapError("empty interval " + to_string(d), index);
  if (d.hi && *d.hi == d.lo && !(d.lo_closed && d.hi_closed)) {
    throw DomainGapError("empty interval " + to_string(d), index);
  }
  if (s.formula.den.is_zero()) throw PoleError("denominator is identically zero", index);
  s.formula = s.formula.reduced();
  if (s.formula.num.degree() > kMaxSegmentDegree || s.formula.den.degree() > kMaxSegmentDegree) {
    throw DegreeError("formula degree exceeds " + std::to_string(kMaxSegmentDegree), index);
  }
  // Denominator: no root on the closure of the domain, then fix its sign.
  if (s.formula.den.degree() >= 1) {
    SignSummary den_sign = poly_sign_on_interval(s.formula.den, d);
    bool pole = den_sign.kind == SignSummary::Kind::kMixed ||
                den_sign.kind == SignSummary::Kind::kZero || s.formula.den(d.lo) == 0 ||
                (d.hi && s.formula.den(*d.hi) == 0);
    if (pole) throw PoleError("denominator vanishes on " + to_string(d), index);
    if (den_sign.piece_signs.front() < 0) {
      s.formula.num = -s.formula.num;
      s.formula.den = -s.formula.den;
    }
  } else if (sgn(s.formula.den.leading()) < 0) {
    s.formula.num = -s.formula.num;
    s.formula.den = -s.formula.den;
  }
  SignSummary num_sign = poly_sign_on_interval(s.formula.num, d);
  if (!num_sign.nonnegative()) {
    throw NegativeValueError("formula takes negative values on " + to_string(d), index);
  }
}

}  // namespace

PiecewiseFunction::PiecewiseFunction(std::vector<Segment> segments) {
  if (segments.empty()) throw DomainGapError("no segments");
  for (size_t i = 0; i < segments.size(); ++i) validate_segment(segments[i], i);

  std::vector<size_t> order(segments.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const auto& da = segments[a].domain;
    const auto& db = segments[b].domain;
    int c = cmp(da.lo, db.lo);
    if (c != 0) return c < 0;
    return da.lo_closed && !db.lo_closed;
  });

  const Interval& first = segments[order.front()].domain;
  if (first.lo != 0 || !first.lo_closed) {
    throw DomainGapError("segments do not cover [0, " + to_string(first.lo) + "]",
                         order.front());
  }
  for (size_t k = 0; k + 1 < order.size(); ++k) {
    const Interval& a = segments[order[k]].domain;
    const Interval& b = segments[order[k + 1]].domain;
    if (!a.hi) {
      throw DomainGapError("segment " + to_string(b) + " overlaps unbounded " + to_string(a),
                           order[k + 1]);
    }
    int c = cmp(*a.hi, b.lo);
    if (c < 0 || (c == 0 && !a.hi_closed && !b.lo_closed)) {
      std::string gap = std::string(a.hi_closed ? "(" : "[") + to_string(*a.hi) + ", " +
                        to_string(b.lo) + (b.lo_closed ? ")" : "]");
      throw DomainGapError("gap " + gap + " between segments", order[k + 1]);
    }
    if (c > 0 || (a.hi_closed && b.lo_closed)) {
      throw DomainGapError("segments " + to_string(a) + " and " + to_string(b) + " overlap",
                           order[k + 1]);
    }
  }
  if (segments[order.back()].domain.hi) {
    throw DomainGapError("segments do not reach infinity", order.back());
  }
  segments_.reserve(segments.size());
  for (size_t i : order) segments_.push_back(std::move(segments[i]));
}

size_t PiecewiseFunction::segment_index_at(const Rational& x) const {
  if (sgn(x) < 0) throw OutOfDomain("negative argument " + to_string(x));
  // Segments are sorted and partition [0, inf).
  size_t lo = 0;
  size_t hi = segments_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    const Interval& d = segments_[mid].domain;
    int c = cmp(x, d.lo);
    if (c > 0 || (c == 0 && d.lo_closed)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational PiecewiseFunction::operator()(const Rational& x) const {
  return segment_at(x).formula(x);
}

std::vector<Rational> PiecewiseFunction::knots() const {
  std::vector<Rational> out;
  for (const auto& s : segments_) {
    if (out.empty() || out.back() != s.domain.lo) out.push_back(s.domain.lo);
    if (s.domain.hi && out.back() != *s.domain.hi) out.push_back(*s.domain.hi);
  }
  return out;
}

bool PiecewiseFunction::is_piecewise_affine() const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [](const Segment& s) { return s.formula.is_affine(); });
}

std::string PiecewiseFunction::to_dsl() const {
  std::ostringstream os;
  os << "piecewise\n";
  for (const auto& s : segments_) {
    os << to_string(s.domain) << ": " << s.formula.to_string() << "\n";
  }
  return os.str();
}

Rational evaluate(const PiecewiseFunction& f, const Rational& x) { return f(x); }

size_t adjacent_segment(const PiecewiseFunction& f, const Rational& x, Side side) {
  const auto& segs = f.segments();
  for (size_t i = 0; i < segs.size(); ++i) {
    const Interval& d = segs[i].domain;
    if (d.is_point()) continue;
    if (side == Side::kLeft) {
      if (d.lo < x && (!d.hi || x <= *d.hi)) return i;
    } else {
      if (d.lo <= x && (!d.hi || x < *d.hi)) return i;
    }
  }
  throw OutOfDomain("no segment adjacent to " + to_string(x));
}

ExtRational one_sided_limit(const PiecewiseFunction& f, const ExtRational& x, Side side) {
  if (x.is_infinite()) {
    if (side != Side::kLeft) throw OutOfDomain("right limit at infinity");
    return f.segments().back().formula.limit_at_infinity();
  }
  const Rational& at = x.value();
  if (sgn(at) < 0) throw OutOfDomain("limit at negative point");
  if (side == Side::kLeft && sgn(at) == 0) throw OutOfDomain("left limit at 0");
  return f.segments()[adjacent_segment(f, at, side)].formula(at);
}

}  // namespace umpf
