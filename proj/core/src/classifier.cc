#include "umpf/classifier.h"

#include "umpf/errors.h"
#include "umpf/search.h"

namespace umpf {
namespace {

Verdict refuted_by(const char* rule, const Witness& w) { return Verdict::refuted(rule, w); }

Verdict decide_U(const PiecewiseFunction& f, const PropertyVerdicts& p) {
  if (p.amenable.is_proven() && p.increasing.is_proven()) {
    return Verdict::proven("amenable and increasing");
  }
  if (auto w = find_U_violation(f)) {
    return refuted_by(p.amenable.is_refuted() ? "not amenable" : "not increasing", *w);
  }
  return Verdict::unknown("amenability undecided");
}

Verdict decide_MU(const PiecewiseFunction& f, const PropertyVerdicts& p) {
  if (p.amenable.is_proven() && p.constant_on_positive.is_proven()) {
    return Verdict::proven("amenable and constant on (0, inf)", p.constant_on_positive.value);
  }
  if (auto w = find_MU_violation(f)) {
    return refuted_by(p.amenable.is_refuted() ? "not amenable" : "geometric chain", *w);
  }
  return Verdict::unknown("amenability undecided");
}

Verdict decide_UM(const PiecewiseFunction& f, const PropertyVerdicts& p) {
  if (p.amenable.is_proven() && p.doubling.is_proven()) {
    return Verdict::proven("amenable and f(a) <= 2 f(b) for a <= b");
  }
  SearchResult r = find_UM_violation(f);
  if (r.witness) {
    return refuted_by(p.amenable.is_refuted() ? "not amenable" : "doubling fails", *r.witness);
  }
  return Verdict::unknown(p.doubling.is_unknown() ? p.doubling.rule : "amenability undecided");
}

Verdict decide_M(const PiecewiseFunction& f, const PropertyVerdicts& p,
                 const SearchBudget& budget) {
  if (auto w = amenability_witness(f, p.amenable)) return refuted_by("not amenable", *w);
  if (f.is_piecewise_affine()) {
    SearchResult r = find_M_violation(f, budget.evaluations, budget.seed);
    if (r.witness) return refuted_by("exact affine cells", *r.witness);
    if (r.exhaustive) return Verdict::proven("exact affine cells");
  }
  if (p.amenable.is_proven()) {
    if (p.subadditive.is_proven() && p.increasing.is_proven()) {
      return Verdict::proven("amenable, subadditive and increasing");
    }
    if (p.tightly_bounded.is_proven()) return Verdict::proven("amenable and tightly bounded");
    if (p.concave.is_proven()) return Verdict::proven("amenable and concave");
  }
  SearchResult r = find_M_violation(f, budget.evaluations, budget.seed);
  if (r.witness) return refuted_by("triplet search", *r.witness);
  return Verdict::unknown("no sufficient condition holds and no triplet found");
}

PropertyVerdicts compute_properties(const PiecewiseFunction& f, const SearchBudget& budget) {
  return {is_amenable(f),
          is_increasing(f),
          is_concave(f),
          is_subadditive(f, budget),
          is_tightly_bounded(f),
          is_constant_on_positive(f),
          satisfies_doubling(f)};
}

// Carries a refutation into a smaller class. The realized space of a
// refutation of UM is an ultrametric, hence also a metric.
Verdict inherit_refutation(const Verdict& from, const char* rule, bool ultrametric_image,
                           const PiecewiseFunction& f) {
  const Witness* w = from.witness();
  Witness carried = ultrametric_image ? rewitness_for_ultrametric(*w, f) : *w;
  return Verdict::refuted(rule, carried);
}

}  // namespace

Verdict classify_U(const PiecewiseFunction& f) {
  PropertyVerdicts p;
  p.amenable = is_amenable(f);
  p.increasing = is_increasing(f);
  return decide_U(f, p);
}

Verdict classify_MU(const PiecewiseFunction& f) {
  PropertyVerdicts p;
  p.amenable = is_amenable(f);
  p.constant_on_positive = is_constant_on_positive(f);
  return decide_MU(f, p);
}

Verdict classify_UM(const PiecewiseFunction& f) {
  PropertyVerdicts p;
  p.amenable = is_amenable(f);
  p.doubling = satisfies_doubling(f);
  return decide_UM(f, p);
}

Verdict classify_M(const PiecewiseFunction& f, const SearchBudget& budget) {
  return decide_M(f, compute_properties(f, budget), budget);
}

ClassReport classify_all(const PiecewiseFunction& f, const SearchBudget& budget) {
  ClassReport r;
  r.properties = compute_properties(f, budget);
  r.in_U = decide_U(f, r.properties);
  r.in_M = decide_M(f, r.properties, budget);
  r.in_MU = decide_MU(f, r.properties);
  r.in_UM = decide_UM(f, r.properties);

  // Inclusions MU in U and M, and U, M in UM, fill in undecided verdicts.
  if (r.in_MU.is_proven()) {
    if (r.in_U.is_unknown()) r.in_U = Verdict::proven("contains MU");
    if (r.in_M.is_unknown()) r.in_M = Verdict::proven("contains MU");
  }
  if (r.in_UM.is_unknown() && (r.in_U.is_proven() || r.in_M.is_proven())) {
    r.in_UM = Verdict::proven(r.in_U.is_proven() ? "contains U" : "contains M");
  }
  if (r.in_UM.is_refuted() && r.in_UM.witness()) {
    if (r.in_U.is_unknown()) r.in_U = inherit_refutation(r.in_UM, "not in UM", true, f);
    if (r.in_M.is_unknown()) r.in_M = inherit_refutation(r.in_UM, "not in UM", false, f);
  }
  if (r.in_MU.is_unknown()) {
    if (r.in_U.is_refuted() && r.in_U.witness()) {
      r.in_MU = inherit_refutation(r.in_U, "not in U", true, f);
    } else if (r.in_M.is_refuted() && r.in_M.witness()) {
      r.in_MU = inherit_refutation(r.in_M, "not in M", true, f);
    }
  }

  for (auto [name, v] : {std::pair<const char*, const Verdict*>{"U", &r.in_U},
                         {"M", &r.in_M},
                         {"MU", &r.in_MU},
                         {"UM", &r.in_UM}}) {
    r.rules_fired.push_back(std::string(name) + " " + to_string(v->status) + ": " + v->rule);
  }
  r.continuity = continuity_profile(f, r);
  return r;
}

std::vector<std::string> validate_inclusions(const ClassReport& report) {
  std::vector<std::string> out;
  const bool mu = report.in_MU.is_proven();
  if (mu && !report.in_U.is_proven()) out.push_back("MU ⊆ U broken");
  if (mu && !report.in_M.is_proven()) out.push_back("MU ⊆ M broken");
  if (mu && report.in_UM.is_refuted()) out.push_back("MU ⊆ UM broken");
  if (report.in_U.is_proven() && !report.in_UM.is_proven()) out.push_back("U ⊆ UM broken");
  if (report.in_M.is_proven() && !report.in_UM.is_proven()) out.push_back("M ⊆ UM broken");
  bool any = report.in_U.is_proven() || report.in_M.is_proven() || mu ||
             report.in_UM.is_proven();
  if (any && !report.properties.amenable.is_proven()) {
    out.push_back("member of a class but not amenable");
  }
  return out;
}

ContinuityProfile continuity_profile(const PiecewiseFunction& f, const ClassReport& report) {
  ContinuityProfile p;
  p.at_zero = is_continuous_at_zero(f).is_proven();
  ContinuityReport global = global_continuity_report(f);
  p.everywhere = global.continuous_everywhere;
  p.discontinuities = global.discontinuities;
  p.uniformly_continuous = is_uniformly_continuous(f);
  try {
    InfimumReport inf = infimum_positive(f);
    p.inf_positive = inf.inf;
    p.inf_attained = inf.attained;
  } catch (const IrrationalExtremumUnresolved&) {
  }
  std::optional<bool> inf_zero;
  if (p.inf_positive) inf_zero = *p.inf_positive == Rational(0);

  if (report.in_M.is_proven()) {
    if (p.at_zero != p.everywhere) {
      p.consistency_notes.push_back("M member: continuity at 0 differs from continuity");
    }
    if (inf_zero && p.at_zero != *inf_zero) {
      p.consistency_notes.push_back("M member: continuity at 0 differs from inf = 0");
    }
    if (p.at_zero && !p.uniformly_continuous) {
      p.consistency_notes.push_back("M member: continuous but not uniformly continuous");
    }
  }
  if (report.in_UM.is_proven()) {
    if (inf_zero && p.at_zero != *inf_zero) {
      p.consistency_notes.push_back("UM member: continuity at 0 differs from inf = 0");
    }
    if (!p.at_zero && inf_zero && *inf_zero) {
      p.consistency_notes.push_back("UM member discontinuous at 0 with inf = 0");
    }
  }
  return p;
}

}  // namespace umpf
