#include "umpf/properties.h"

#include <algorithm>
#include <set>

#include "grid.h"
#include "umpf/errors.h"
#include "umpf/extrema.h"
#include "umpf/lcg.h"
#include "umpf/polyhedron.h"
#include "umpf/real_roots.h"

namespace umpf {
namespace {

constexpr int kApproachSteps = 400;
const Interval kPositive = Interval::ray(0, false);

Rational halve(const Rational& x, int k) {
  Rational r = x;
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

std::optional<ChordWitness> chord_violation(const PiecewiseFunction& f, const Rational& x1,
                                            const Rational& x2, const Rational& t) {
  if (sgn(x1) < 0 || sgn(x2) < 0) return std::nullopt;
  Rational mid = (1 - t) * x1 + t * x2;
  Rational value = f(mid);
  Rational chord = (1 - t) * f(x1) + t * f(x2);
  if (value < chord) return ChordWitness{x1, x2, t, value, chord};
  return std::nullopt;
}

// Largest step h0 <= 1 that keeps x +- h0 inside the neighbouring knots.
Rational local_step(const std::vector<Rational>& knots, size_t idx) {
  Rational h = 1;
  if (idx > 0) h = std::min(h, Rational(knots[idx] - knots[idx - 1]));
  if (idx + 1 < knots.size()) h = std::min(h, Rational(knots[idx + 1] - knots[idx]));
  return h;
}

// Pair (a, b) with a <= b and f(a) > factor * f(b) along two approach sequences.
std::optional<PairWitness> approach_pair(const PiecewiseFunction& f, const Location& la,
                                         const Location& lb, const Rational& factor) {
  for (int k = 0; k < kApproachSteps; ++k) {
    Rational a = approach(la, k);
    Rational b = approach(lb, k);
    if (a > b || sgn(a) < 0) continue;
    Rational fa = f(a);
    Rational fb = f(b);
    if (fa > factor * fb) return PairWitness{a, b, fa, fb};
  }
  return std::nullopt;
}

// An exactly comparable value: rational (or infinity), or a formula at an
// irrational algebraic point.
struct Value {
  Value() = default;
  Value(ExtRational v) : r(std::move(v)) {}  // NOLINT
  Value(const RationalFunction& f, AlgebraicNumber a) : g(&f), alpha(std::move(a)) {}

  ExtRational r;
  const RationalFunction* g = nullptr;
  std::optional<AlgebraicNumber> alpha;

  bool irrational() const { return alpha && !alpha->is_rational(); }
};

Value value_at(const RationalFunction& g, const AlgebraicNumber& a) {
  if (a.is_rational()) return {g(a.value())};
  return Value(g, a);
}

// sign(kx * x - ky * y)
int compare_scaled(const Value& x, long kx, const Value& y, long ky) {
  if (!x.irrational() && !y.irrational()) {
    if (x.r.is_infinite() || y.r.is_infinite()) {
      if (x.r.is_infinite() && y.r.is_infinite()) return 0;
      return x.r.is_infinite() ? 1 : -1;
    }
    return sgn(Rational(kx * x.r.value() - ky * y.r.value()));
  }
  if (x.irrational() && !y.irrational()) {
    if (y.r.is_infinite()) return -1;
    return x.alpha->sign_of(x.g->num * Rational(kx) - x.g->den * Rational(ky * y.r.value()));
  }
  if (!x.irrational() && y.irrational()) return -compare_scaled(y, ky, x, kx);
  if (x.g == y.g && x.alpha->compare(*y.alpha) == 0) {
    int s = x.alpha->sign_of(x.g->num);
    return kx == ky ? 0 : (kx > ky ? s : -s);
  }
  throw IrrationalExtremumUnresolved("cannot order two irrational values");
}

std::vector<Rational> positive_knots(const PiecewiseFunction& f) {
  std::vector<Rational> out;
  for (const auto& k : f.knots()) {
    if (sgn(k) > 0) out.push_back(k);
  }
  return out;
}

Rational grid_bound(const PiecewiseFunction& f) {
  return 2 * f.knots().back() + 4;
}

}  // namespace

Verdict is_amenable(const PiecewiseFunction& f) {
  const char* rule = "zero set of f is {0}";
  Rational f0 = f(Rational(0));
  if (f0 != 0) return Verdict::refuted(rule, PointWitness{0, f0});
  bool irrational_zero = false;
  for (const auto& seg : f.segments()) {
    Interval j = intersect(seg.domain, kPositive);
    if (j.empty()) continue;
    const Polynomial& num = seg.formula.num;
    if (num.is_zero()) {
      Rational x = j.sample();
      return Verdict::refuted(rule, PointWitness{x, 0});
    }
    if (j.lo_closed && sgn(num(j.lo)) == 0) return Verdict::refuted(rule, PointWitness{j.lo, 0});
    if (!j.is_point()) {
      for (const auto& root : isolate_real_roots(squarefree_part(num), j)) {
        if (root.is_rational()) return Verdict::refuted(rule, PointWitness{root.value(), 0});
        irrational_zero = true;
      }
    }
    if (j.hi && j.hi_closed && sgn(num(*j.hi)) == 0) {
      return Verdict::refuted(rule, PointWitness{*j.hi, 0});
    }
  }
  if (irrational_zero) return Verdict::unknown("positive zero only at irrational points");
  return Verdict::proven(rule);
}

Verdict is_increasing(const PiecewiseFunction& f) {
  const char* rule = "derivative sign and junction bounds";
  const auto& segs = f.segments();
  for (const auto& seg : segs) {
    if (seg.domain.is_point()) continue;
    SignSummary s = poly_sign_on_interval(seg.formula.derivative_numerator(), seg.domain);
    if (auto k = s.first_piece_with_sign(-1)) {
      auto pts = s.points_in_piece(*k, 2);
      return Verdict::refuted(rule, PairWitness{pts[0], pts[1], f(pts[0]), f(pts[1])});
    }
  }
  try {
    for (size_t i = 0; i + 1 < segs.size(); ++i) {
      ExtremaResult left = extrema_on(f, segs[i].domain);
      ExtremaResult right = extrema_on(f, segs[i + 1].domain);
      if (left.sup <= right.inf) continue;
      if (auto w = approach_pair(f, left.sup_at, right.inf_at, Rational(1))) {
        return Verdict::refuted(rule, *w);
      }
      return Verdict::unknown("junction witness not found");
    }
  } catch (const IrrationalExtremumUnresolved&) {
    return Verdict::unknown("irrational junction extremum");
  }
  return Verdict::proven(rule);
}

Verdict is_concave(const PiecewiseFunction& f) {
  const char* rule = "continuity, second derivative and one-sided slopes";
  const Rational half(1, 2);
  std::vector<Rational> knots = f.knots();

  // Jump at 0: only a drop from f(0) breaks concavity.
  {
    Rational v = f(Rational(0));
    ExtRational r = one_sided_limit(f, Rational(0), Side::kRight);
    if (r < v && knots.size() > 1) {
      Rational h0 = local_step(knots, 0);
      for (int k = 0; k < kApproachSteps; ++k) {
        if (auto w = chord_violation(f, 0, halve(h0, k), half)) return Verdict::refuted(rule, *w);
      }
    }
  }
  for (size_t idx = 1; idx < knots.size(); ++idx) {
    const Rational& b = knots[idx];
    Rational v = f(b);
    ExtRational l = one_sided_limit(f, b, Side::kLeft);
    ExtRational r = one_sided_limit(f, b, Side::kRight);
    if (l == v && r == v) continue;
    Rational h0 = local_step(knots, idx);
    for (int k = 0; k < kApproachSteps; ++k) {
      Rational h = halve(h0, k);
      using Chord = std::pair<Rational, Rational>;
      for (const auto& [x1, x2] : {Chord{b - h, b + h}, Chord{b - h, b}, Chord{b, b + h}}) {
        if (auto w = chord_violation(f, x1, x2, half)) return Verdict::refuted(rule, *w);
      }
    }
    return Verdict::unknown("jump witness not found");
  }
  for (const auto& seg : f.segments()) {
    if (seg.domain.is_point()) continue;
    SignSummary s = poly_sign_on_interval(seg.formula.second_derivative_numerator(), seg.domain);
    if (auto k = s.first_piece_with_sign(1)) {
      auto pts = s.points_in_piece(*k, 2);
      if (auto w = chord_violation(f, pts[0], pts[1], half)) return Verdict::refuted(rule, *w);
      return Verdict::unknown("convex piece witness not found");
    }
  }
  for (size_t idx = 1; idx < knots.size(); ++idx) {
    const Rational& b = knots[idx];
    const auto& left = f.segments()[adjacent_segment(f, b, Side::kLeft)].formula;
    const auto& right = f.segments()[adjacent_segment(f, b, Side::kRight)].formula;
    if (left.derivative_at(b) >= right.derivative_at(b)) continue;
    Rational h0 = local_step(knots, idx);
    for (int k = 0; k < kApproachSteps; ++k) {
      Rational h = halve(h0, k);
      if (auto w = chord_violation(f, b - h, b + h, half)) return Verdict::refuted(rule, *w);
    }
    return Verdict::unknown("kink witness not found");
  }
  return Verdict::proven(rule);
}

namespace {

std::optional<SumWitness> sum_violation(const PiecewiseFunction& f, const Rational& a,
                                        const Rational& b) {
  if (sgn(a) < 0 || sgn(b) < 0) return std::nullopt;
  Rational fa = f(a);
  Rational fb = f(b);
  Rational fs = f(a + b);
  if (fs > fa + fb) return SumWitness{a, b, fa, fb, fs};
  return std::nullopt;
}

std::optional<SumWitness> grid_sum_search(const PiecewiseFunction& f, size_t budget) {
  std::optional<SumWitness> found;
  detail::for_each_grid_tuple(2, grid_bound(f), 12, budget, true, [&](const Point& p) {
    found = sum_violation(f, p[0], p[1]);
    return found.has_value();
  });
  return found;
}

// Exact search over the cells a in I_i, b in I_j, a + b in I_k.
std::optional<SumWitness> affine_sum_cells(const PiecewiseFunction& f) {
  const auto& segs = f.segments();
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i; j < segs.size(); ++j) {
      for (size_t k = 0; k < segs.size(); ++k) {
        Polyhedron cell(2);
        cell.add_membership({Rational(1), Rational(0)}, segs[i].domain);
        cell.add_membership({Rational(0), Rational(1)}, segs[j].domain);
        cell.add_membership({Rational(1), Rational(1)}, segs[k].domain);
        const auto& fi = segs[i].formula;
        const auto& fj = segs[j].formula;
        const auto& fk = segs[k].formula;
        AffineForm g{{fk.slope() - fi.slope(), fk.slope() - fj.slope()},
                     fk.intercept() - fi.intercept() - fj.intercept()};
        if (auto p = find_positive_point(cell, g)) return sum_violation(f, (*p)[0], (*p)[1]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict is_subadditive(const PiecewiseFunction& f, const SearchBudget& budget) {
  if (f.is_piecewise_affine()) {
    const char* rule = "exact affine cells";
    auto w = affine_sum_cells(f);
    if (!w) return Verdict::proven(rule);
    if (auto polished = grid_sum_search(f, budget.evaluations)) w = polished;
    return Verdict::refuted(rule, *w);
  }
  if (is_amenable(f).is_proven() && is_concave(f).is_proven()) {
    return Verdict::proven("amenable and concave");
  }
  const char* rule = "pair search";
  if (auto w = grid_sum_search(f, budget.evaluations / 2)) return Verdict::refuted(rule, *w);
  std::vector<Rational> cand = positive_knots(f);
  size_t base = cand.size();
  for (size_t x = 0; x < base; ++x) {
    for (size_t y = x; y < base; ++y) {
      cand.push_back(cand[x] + cand[y]);
      cand.push_back(cand[y] - cand[x]);
      cand.push_back((cand[x] + cand[y]) / 2);
    }
  }
  for (size_t x = 0; x < cand.size(); ++x) {
    for (size_t y = x; y < cand.size(); ++y) {
      if (auto w = sum_violation(f, cand[x], cand[y])) return Verdict::refuted(rule, *w);
    }
  }
  Lcg rng(budget.seed);
  for (size_t n = 0; n < budget.evaluations / 2; ++n) {
    Rational a = rng.draw();
    Rational b = rng.draw();
    if (auto w = sum_violation(f, a, b)) return Verdict::refuted(rule, *w);
  }
  return Verdict::unknown("no violation found within budget");
}

Verdict ratio_is_decreasing(const PiecewiseFunction& f, size_t samples, std::uint64_t seed) {
  const char* rule = "sampled ratio check";
  std::set<Rational> points{Rational(1), Rational(2)};
  for (const auto& k : positive_knots(f)) points.insert(k);
  Lcg rng(seed);
  for (size_t i = 0; i < samples; ++i) points.insert(rng.draw());
  std::vector<Rational> xs(points.begin(), points.end());
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational fa = f(xs[i]);
    Rational fb = f(xs[i + 1]);
    if (fa / xs[i] < fb / xs[i + 1]) {
      return Verdict::refuted(rule, PairWitness{xs[i], xs[i + 1], fa, fb});
    }
  }
  return Verdict::proven(rule);
}

Verdict is_tightly_bounded(const PiecewiseFunction& f) {
  const char* rule = "inf and sup over (0, inf)";
  try {
    ExtremaResult e = extrema_on(f, kPositive);
    BoundsWitness bounds{e.inf, e.inf_attained, e.sup, e.sup_attained};
    if (e.inf == Rational(0)) return Verdict::refuted(rule, bounds);
    if (e.sup.is_finite() && e.sup.value() <= 2 * e.inf.value()) {
      return Verdict::proven(rule, e.inf);
    }
    if (auto w = approach_pair(f, e.sup_at, e.inf_at, Rational(2))) {
      return Verdict::refuted(rule, *w);
    }
    // The supremum may sit to the right of the infimum; order the pair freely.
    for (int k = 0; k < kApproachSteps; ++k) {
      Rational a = approach(e.sup_at, k);
      Rational b = approach(e.inf_at, k);
      if (f(a) > 2 * f(b)) return Verdict::refuted(rule, PairWitness{a, b, f(a), f(b)});
    }
    return Verdict::refuted(rule, bounds);
  } catch (const IrrationalExtremumUnresolved&) {
    return Verdict::unknown("irrational extremum");
  }
}

Verdict is_constant_on_positive(const PiecewiseFunction& f) {
  const char* rule = "formula identity on (0, inf)";
  std::vector<Rational> points = positive_knots(f);
  std::vector<const Segment*> positive;
  for (const auto& seg : f.segments()) {
    Interval j = intersect(seg.domain, kPositive);
    if (j.empty()) continue;
    positive.push_back(&seg);
    if (j.is_point()) continue;
    std::optional<AlgebraicNumber> hi;
    if (j.hi) hi = AlgebraicNumber::rational(*j.hi);
    for (const auto& x : rationals_between(AlgebraicNumber::rational(j.lo), hi, 2)) {
      points.push_back(x);
    }
  }
  auto differing = [&](const std::vector<Rational>& xs) -> std::optional<PairWitness> {
    Rational u = xs.front();
    Rational fu = f(u);
    for (const auto& v : xs) {
      Rational fv = f(v);
      if (fv == fu) continue;
      if (v < u) return PairWitness{v, u, fv, fu};
      return PairWitness{u, v, fu, fv};
    }
    return std::nullopt;
  };
  if (auto w = differing(points)) return Verdict::refuted(rule, *w);
  // Every sample agrees; a nonconstant formula of bounded degree still
  // changes value among a dozen interior points.
  Rational c = f(points.front());
  for (const Segment* seg : positive) {
    if (seg->formula.is_constant() && seg->formula.constant_value() == c) continue;
    Interval j = intersect(seg->domain, kPositive);
    std::optional<AlgebraicNumber> hi;
    if (j.hi) hi = AlgebraicNumber::rational(*j.hi);
    std::vector<Rational> xs{points.front()};
    for (const auto& x : rationals_between(AlgebraicNumber::rational(j.lo), hi, 12)) {
      xs.push_back(x);
    }
    if (auto w = differing(xs)) return Verdict::refuted(rule, *w);
  }
  return Verdict::proven(rule, c);
}

Verdict satisfies_doubling(const PiecewiseFunction& f) {
  const char* rule = "running supremum sweep";
  // Running supremum of f over everything left of the current element.
  Value t{Rational(0)};
  std::optional<Location> t_at;

  auto fail = [&](const Location& a, const Location& b) {
    if (auto w = approach_pair(f, a, b, Rational(2))) return Verdict::refuted(rule, *w);
    return Verdict::unknown("doubling witness not found");
  };
  auto raise = [&](const Value& v, const Location& at) {
    int c = compare_scaled(v, 1, t, 1);
    if (c > 0 || (c == 0 && at.attained() && !(t_at && t_at->attained()))) {
      t = v;
      t_at = at;
    }
  };

  try {
    const auto& segs = f.segments();
    for (size_t s = 0; s < segs.size(); ++s) {
      const Interval& dom = segs[s].domain;
      const RationalFunction& g = segs[s].formula;
      auto point = [&](const Rational& x) -> std::optional<Verdict> {
        Value v{g(x)};
        if (t_at && compare_scaled(t, 1, v, 2) > 0) return fail(*t_at, Location::point(x));
        raise(v, Location::point(x));
        return std::nullopt;
      };
      if (dom.is_point() || dom.lo_closed) {
        if (auto v = point(dom.lo)) return *v;
        if (dom.is_point()) continue;
      }
      for (const auto& piece : monotone_pieces(f, s)) {
        Value lv = piece.left ? value_at(g, *piece.left) : Value{g(dom.lo)};
        Location l_at = piece.left ? Location::at(*piece.left)
                                   : Location::right_limit(dom.lo, piece.inner);
        Value rv;
        Location r_at;
        if (piece.right) {
          rv = value_at(g, *piece.right);
          r_at = Location::at(*piece.right);
        } else if (dom.hi) {
          rv = Value{g(*dom.hi)};
          r_at = Location::left_limit(*dom.hi, piece.inner);
        } else {
          rv = Value{g.limit_at_infinity()};
          r_at = Location::infinity(piece.inner);
        }
        if (piece.direction > 0) {
          if (t_at && compare_scaled(t, 1, lv, 2) > 0) return fail(*t_at, l_at);
          raise(rv, r_at);
        } else {
          if (t_at && compare_scaled(t, 1, rv, 2) > 0) return fail(*t_at, r_at);
          if (compare_scaled(lv, 1, rv, 2) > 0) return fail(l_at, r_at);
          raise(lv, l_at);
        }
      }
      if (dom.hi && dom.hi_closed) {
        if (auto v = point(*dom.hi)) return *v;
      }
    }
  } catch (const IrrationalExtremumUnresolved&) {
    return Verdict::unknown("irrational values not comparable");
  }
  return Verdict::proven(rule);
}

InfimumReport infimum_positive(const PiecewiseFunction& f) {
  ExtremaResult e = extrema_on(f, kPositive);
  return {e.inf, e.inf_attained};
}

Verdict is_continuous_at_zero(const PiecewiseFunction& f) {
  const char* rule = "f(0) = 0 = right limit at 0";
  Rational v = f(Rational(0));
  ExtRational r = one_sided_limit(f, Rational(0), Side::kRight);
  if (v == 0 && r == Rational(0)) return Verdict::proven(rule);
  return Verdict::refuted(rule, LimitWitness{0, r, v});
}

ContinuityReport global_continuity_report(const PiecewiseFunction& f) {
  ContinuityReport out;
  for (const auto& b : f.knots()) {
    Rational v = f(b);
    bool ok = one_sided_limit(f, b, Side::kRight) == v;
    if (sgn(b) > 0) ok = ok && one_sided_limit(f, b, Side::kLeft) == v;
    if (!ok) out.discontinuities.push_back(b);
  }
  out.continuous_everywhere = out.discontinuities.empty();
  return out;
}

bool is_uniformly_continuous(const PiecewiseFunction& f) {
  if (!global_continuity_report(f).continuous_everywhere) return false;
  const RationalFunction& last = f.segments().back().formula;
  return last.num.degree() <= last.den.degree() + 1;
}

}  // namespace umpf
