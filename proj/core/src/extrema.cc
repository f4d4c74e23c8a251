#include "umpf/extrema.h"

#include "umpf/errors.h"

namespace umpf {

Location Location::at(const AlgebraicNumber& a) {
  if (a.is_rational()) return point(a.value());
  return {Kind::kAlgebraic, a.approximation(), a.approximation(), a};
}

Rational approach(const Location& loc, int k) {
  Rational scale(1);
  mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  switch (loc.kind) {
    case Location::Kind::kPoint:
      return loc.x;
    case Location::Kind::kLeftLimit:
    case Location::Kind::kRightLimit:
      return loc.x + (loc.inner - loc.x) * scale;
    case Location::Kind::kInfinity: {
      Rational r = loc.inner / scale;
      return r;
    }
    case Location::Kind::kAlgebraic: {
      AlgebraicNumber a = *loc.algebraic;
      for (int i = 0; i < k; ++i) a.refine();
      return a.approximation();
    }
  }
  return loc.x;
}

namespace {

struct Candidate {
  ExtRational value;  // unused for algebraic candidates
  Location where;
  const RationalFunction* formula = nullptr;
};

// Value ordering where exactly one side may be an irrational critical value.
int compare_algebraic(const Candidate& alg, const ExtRational& r) {
  if (r.is_infinite()) return -1;
  const RationalFunction& g = *alg.formula;
  // g.den > 0 on the segment, so sign(g(alpha) - r) = sign((N - rD)(alpha)).
  return alg.where.algebraic->sign_of(g.num - g.den * r.value());
}

struct Best {
  std::optional<Candidate> pick;
  bool attained = false;
};

// sign: +1 for the supremum, -1 for the infimum.
Best select(const std::vector<Candidate>& rational, const std::vector<Candidate>& algebraic,
            int sign) {
  Best best;
  for (const auto& c : rational) {
    if (!best.pick) {
      best.pick = c;
      best.attained = c.where.attained();
      continue;
    }
    auto ord = c.value <=> best.pick->value;
    int s = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
    if (s * sign > 0) {
      best.pick = c;
      best.attained = c.where.attained();
    } else if (s == 0 && c.where.attained() && !best.attained) {
      best.pick = c;
      best.attained = true;
    }
  }
  for (const auto& c : algebraic) {
    int s = compare_algebraic(c, best.pick->value);
    if (s * sign > 0) {
      throw IrrationalExtremumUnresolved("extremum at irrational critical point " +
                                         c.where.algebraic->to_string());
    }
    if (s == 0) best.attained = true;
  }
  return best;
}

Rational inner_point(const Interval& j) {
  if (j.hi) return (j.lo + *j.hi) / 2;
  return j.lo + 1;
}

}  // namespace

ExtremaResult extrema_on(const PiecewiseFunction& f, const Interval& interval) {
  if (interval.empty()) throw PreconditionError("extrema over an empty interval");
  std::vector<Candidate> rational;
  std::vector<Candidate> algebraic;
  for (const auto& seg : f.segments()) {
    Interval j = intersect(seg.domain, interval);
    if (j.empty()) continue;
    const RationalFunction& g = seg.formula;
    if (j.is_point()) {
      rational.push_back({g(j.lo), Location::point(j.lo), &g});
      continue;
    }
    Rational inner = inner_point(j);
    if (j.lo_closed) {
      rational.push_back({g(j.lo), Location::point(j.lo), &g});
    } else {
      rational.push_back({g(j.lo), Location::right_limit(j.lo, inner), &g});
    }
    Polynomial dn = g.derivative_numerator();
    if (!dn.is_zero()) {
      for (const auto& root : isolate_real_roots(squarefree_part(dn), j)) {
        if (root.is_rational()) {
          rational.push_back({g(root.value()), Location::point(root.value()), &g});
        } else {
          algebraic.push_back({Rational(0), Location::at(root), &g});
        }
      }
    }
    Rational s = j.sample();
    rational.push_back({g(s), Location::point(s), &g});
    if (j.hi) {
      if (j.hi_closed) {
        rational.push_back({g(*j.hi), Location::point(*j.hi), &g});
      } else {
        rational.push_back({g(*j.hi), Location::left_limit(*j.hi, inner), &g});
      }
    } else {
      rational.push_back({g.limit_at_infinity(), Location::infinity(inner), &g});
    }
  }
  if (rational.empty()) throw PreconditionError("interval outside the domain");
  Best hi = select(rational, algebraic, 1);
  Best lo = select(rational, algebraic, -1);
  ExtremaResult r;
  r.sup = hi.pick->value;
  r.sup_attained = hi.attained;
  r.sup_at = hi.pick->where;
  r.inf = lo.pick->value;
  r.inf_attained = lo.attained;
  r.inf_at = lo.pick->where;
  return r;
}

std::vector<MonotonePiece> monotone_pieces(const PiecewiseFunction& f, size_t segment) {
  const Segment& seg = f.segments()[segment];
  std::vector<MonotonePiece> out;
  if (seg.domain.is_point()) return out;
  SignSummary s = poly_sign_on_interval(seg.formula.derivative_numerator(), seg.domain);
  for (size_t k = 0; k < s.piece_signs.size(); ++k) {
    MonotonePiece p;
    p.segment = segment;
    if (k > 0) p.left = s.roots[k - 1];
    if (k < s.roots.size()) p.right = s.roots[k];
    p.direction = s.piece_signs[k] < 0 ? -1 : 1;
    p.inner = s.points_in_piece(k, 1).front();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace umpf
