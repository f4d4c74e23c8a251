#include "umpf/search.h"

#include <algorithm>
#include <set>

#include "grid.h"
#include "umpf/errors.h"
#include "umpf/lcg.h"
#include "umpf/polyhedron.h"

namespace umpf {
namespace {

bool checks_ultrametric(Witness::Kind kind) {
  return kind == Witness::Kind::kMonotonePair || kind == Witness::Kind::kNonConstantPair ||
         kind == Witness::Kind::kTripletMU;
}

std::optional<AxiomViolation> image_violation(const DistanceMatrix& realized,
                                              const PiecewiseFunction& f, bool ultrametric) {
  DistanceMatrix image = transform_space(realized, f);
  Verdict v = ultrametric ? validate_ultrametric(image) : validate_metric(image);
  if (!v.is_refuted()) return std::nullopt;
  return std::get<AxiomViolation>(*v.evidence);
}

Witness build(Witness::Kind kind, std::variant<PairWitness, PointWitness, Triplet> payload,
              DistanceMatrix realized, const PiecewiseFunction& f) {
  auto violation = image_violation(realized, f, checks_ultrametric(kind));
  if (!violation) throw std::logic_error("witness image satisfies the axioms");
  return {kind, std::move(payload), std::move(realized), *violation};
}

// (a, b, b) as an ultra triangle triplet; a <= b.
Witness isoceles(Witness::Kind kind, const PairWitness& p, const PiecewiseFunction& f) {
  Triplet t = make_triplet(p.a, p.b, p.b);
  return build(kind, p, realize_triplet(t, RealizeMode::kUltrametric), f);
}

bool violates_m(const PiecewiseFunction& f, const Point& x) {
  if (sgn(x[0]) <= 0 || sgn(x[1]) <= 0 || sgn(x[2]) <= 0) return false;
  if (!make_triplet(x[0], x[1], x[2]).in_delta) return false;
  return f(x[0]) > f(x[1]) + f(x[2]);
}

Witness triplet_m(const Point& x, const PiecewiseFunction& f) {
  Triplet t = make_triplet(x[0], x[1], x[2]);
  return build(Witness::Kind::kTripletM, t, realize_triplet(t, RealizeMode::kMetric), f);
}

std::optional<Point> grid_triplet_search(const PiecewiseFunction& f, size_t budget) {
  std::optional<Point> found;
  Rational bound = 2 * f.knots().back() + 4;
  detail::for_each_grid_tuple(3, bound, 12, budget, true, [&](const Point& p) {
    if (violates_m(f, p)) found = p;
    return found.has_value();
  });
  return found;
}

// Exact search over cells a in I_i, b in I_j, c in I_k intersected with the
// triangle cone; b and c are symmetric, so j <= k.
std::optional<Point> affine_triplet_cells(const PiecewiseFunction& f) {
  const auto& segs = f.segments();
  const Rational one(1), zero(0), minus(-1);
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = 0; j < segs.size(); ++j) {
      for (size_t k = j; k < segs.size(); ++k) {
        Polyhedron cell(3);
        cell.add_membership({one, zero, zero}, segs[i].domain);
        cell.add_membership({zero, one, zero}, segs[j].domain);
        cell.add_membership({zero, zero, one}, segs[k].domain);
        cell.add({{minus, one, one}, zero, false});
        cell.add({{one, minus, one}, zero, false});
        cell.add({{one, one, minus}, zero, false});
        const auto& fi = segs[i].formula;
        const auto& fj = segs[j].formula;
        const auto& fk = segs[k].formula;
        AffineForm g{{fi.slope(), -fj.slope(), -fk.slope()},
                     fi.intercept() - fj.intercept() - fk.intercept()};
        if (auto p = find_positive_point(cell, g)) return p;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> amenability_witness(const PiecewiseFunction& f, const Verdict& amenable) {
  if (!amenable.is_refuted()) return std::nullopt;
  const auto& p = std::get<PointWitness>(*amenable.evidence);
  if (sgn(p.x) == 0) {
    DistanceMatrix realized(2);
    realized.set(0, 1, 1);
    return Witness{Witness::Kind::kNonzeroAtOrigin, p, realized,
                   AxiomViolation{Axiom::kM1, 0, 0, std::nullopt, p.fx, 0}};
  }
  DistanceMatrix realized(2);
  realized.set(0, 1, p.x);
  return build(Witness::Kind::kZeroValue, p, realized, f);
}

std::optional<Witness> find_U_violation(const PiecewiseFunction& f) {
  Verdict amenable = is_amenable(f);
  if (auto w = amenability_witness(f, amenable)) return w;
  Verdict inc = is_increasing(f);
  if (!inc.is_refuted()) return std::nullopt;
  return isoceles(Witness::Kind::kMonotonePair, std::get<PairWitness>(*inc.evidence), f);
}

SearchResult find_UM_violation(const PiecewiseFunction& f) {
  Verdict amenable = is_amenable(f);
  if (auto w = amenability_witness(f, amenable)) return {w, true};
  Verdict dbl = satisfies_doubling(f);
  if (dbl.is_refuted()) {
    return {isoceles(Witness::Kind::kDoublingPair, std::get<PairWitness>(*dbl.evidence), f),
            true};
  }
  return {std::nullopt, dbl.is_proven() && amenable.is_proven()};
}

std::optional<Witness> find_MU_violation(const PiecewiseFunction& f) {
  Verdict amenable = is_amenable(f);
  if (auto w = amenability_witness(f, amenable)) return w;
  Verdict constant = is_constant_on_positive(f);
  if (!constant.is_refuted()) return std::nullopt;
  const auto& pair = std::get<PairWitness>(*constant.evidence);
  // Geometric chain u, 2u, 4u, ... below v, plus v and the knots between,
  // so adjacent points are within a factor of 2.
  std::set<Rational> chain{pair.a, pair.b};
  for (Rational r = pair.a; r < pair.b; r *= 2) chain.insert(r);
  for (const auto& k : f.knots()) {
    if (pair.a <= k && k <= pair.b) chain.insert(k);
  }
  std::vector<Rational> pts(chain.begin(), chain.end());
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational f0 = f(pts[i]);
    Rational f1 = f(pts[i + 1]);
    if (f0 == f1) continue;
    PairWitness w = f0 > f1 ? PairWitness{pts[i], pts[i + 1], f0, f1}
                            : PairWitness{pts[i + 1], pts[i], f1, f0};
    Triplet t = make_triplet(w.a, w.b, w.b);
    return build(Witness::Kind::kNonConstantPair, w, realize_triplet(t, RealizeMode::kMetric), f);
  }
  throw std::logic_error("chain refinement found no differing neighbours");
}

SearchResult find_M_violation(const PiecewiseFunction& f, size_t budget, std::uint64_t seed) {
  Verdict amenable = is_amenable(f);
  if (auto w = amenability_witness(f, amenable)) return {w, true};
  if (f.is_piecewise_affine()) {
    auto cell_point = affine_triplet_cells(f);
    if (!cell_point) return {std::nullopt, amenable.is_proven()};
    Point p = grid_triplet_search(f, budget).value_or(*cell_point);
    return {triplet_m(p, f), true};
  }
  if (auto p = grid_triplet_search(f, budget / 2)) return {triplet_m(*p, f), true};
  std::vector<Rational> cand{Rational(1)};
  for (const auto& k : f.knots()) {
    if (sgn(k) > 0) cand.push_back(k);
  }
  size_t base = cand.size();
  for (size_t x = 0; x < base; ++x) {
    for (size_t y = x; y < base; ++y) {
      cand.push_back(cand[x] + cand[y]);
      if (cand[x] != cand[y]) cand.push_back(abs(cand[y] - cand[x]));
      cand.push_back((cand[x] + cand[y]) / 2);
    }
  }
  for (const auto& a : cand) {
    for (const auto& b : cand) {
      for (const auto& c : cand) {
        if (b <= c && violates_m(f, {a, b, c})) return {triplet_m({a, b, c}, f), true};
      }
    }
  }
  Lcg rng(seed);
  for (size_t n = 0; n < budget / 2; ++n) {
    Rational b = rng.draw();
    Rational c = rng.draw();
    Rational lo = abs(b - c);
    Rational a = lo + (b + c - lo) * make_rational(static_cast<long>(rng.below(1001)), 1000);
    if (violates_m(f, {a, b, c})) return {triplet_m({a, b, c}, f), true};
  }
  return {std::nullopt, false};
}

bool verify_witness(const Witness& w, const PiecewiseFunction& f) {
  if (w.kind == Witness::Kind::kNonzeroAtOrigin) {
    const auto* p = std::get_if<PointWitness>(&w.payload);
    Rational f0 = f(Rational(0));
    return p && sgn(p->x) == 0 && p->fx == f0 && f0 != 0 && w.failed_axiom.lhs == f0;
  }
  bool payload_ok = std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PairWitness>) {
          return f(p.a) == p.fa && f(p.b) == p.fb;
        } else if constexpr (std::is_same_v<T, PointWitness>) {
          return f(p.x) == p.fx && sgn(p.fx) == 0;
        } else {
          return make_triplet(p.a, p.b, p.c) == p;
        }
      },
      w.payload);
  if (!payload_ok) return false;
  try {
    auto v = image_violation(w.realized, f, checks_ultrametric(w.kind));
    return v && *v == w.failed_axiom;
  } catch (const Error&) {
    return false;
  }
}

Witness rewitness_for_ultrametric(const Witness& w, const PiecewiseFunction& f) {
  if (w.kind == Witness::Kind::kNonzeroAtOrigin) return w;
  Witness out = w;
  if (auto v = image_violation(w.realized, f, true)) out.failed_axiom = *v;
  return out;
}

CrossValidation cross_validate(const PiecewiseFunction& f, const ClassReport& report,
                               size_t spaces, std::uint64_t seed) {
  CrossValidation out;
  if (f(Rational(0)) != 0) return out;
  Lcg seeds(seed);
  auto record = [&](const char* claim, const char* space, size_t n, std::uint64_t s,
                    const DistanceMatrix& d, const Verdict& v) {
    out.disagreements.push_back(
        {claim, space, n, s, d, v.evidence ? describe(*v.evidence) : std::string("")});
  };
  for (size_t i = 0; i < spaces; ++i) {
    size_t n = 2 + i % 11;
    std::uint64_t s_ultra = seeds.next();
    std::uint64_t s_metric = seeds.next();

    DistanceMatrix u = random_ultrametric(n, s_ultra);
    DistanceMatrix fu = transform_space(u, f);
    Verdict um = validate_metric(fu);
    Verdict uu = validate_ultrametric(fu);
    if (report.in_U.is_proven() && !uu.is_proven()) record("U Proven", "ultrametric", n, s_ultra, u, uu);
    if (report.in_UM.is_proven() && !um.is_proven()) record("UM Proven", "ultrametric", n, s_ultra, u, um);

    DistanceMatrix d = random_metric(n, s_metric);
    DistanceMatrix fd = transform_space(d, f);
    Verdict dm = validate_metric(fd);
    Verdict du = validate_ultrametric(fd);
    bool two_valued = discreteness_profile(fd).two_valued;
    if (report.in_M.is_proven() && !dm.is_proven()) record("M Proven", "metric", n, s_metric, d, dm);
    if (report.in_MU.is_proven() && !du.is_proven()) record("MU Proven", "metric", n, s_metric, d, du);
    if (report.in_MU.is_proven() && !two_valued) {
      out.disagreements.push_back({"MU Proven", "metric", n, s_metric, d, "image not two-valued"});
    }
    out.checked += 2;
    out.image_metric += um.is_proven() + dm.is_proven();
    out.image_ultrametric += uu.is_proven() + du.is_proven();
    out.image_two_valued += two_valued + discreteness_profile(fu).two_valued;
  }
  return out;
}

}  // namespace umpf
