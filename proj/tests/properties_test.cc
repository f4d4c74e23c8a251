#include <gtest/gtest.h>

#include "support.h"
#include "umpf/properties.h"

namespace umpf {
namespace {

using test::fixture;
using test::q;

const PiecewiseFunction& c_variant_2_5() {
  static const PiecewiseFunction f = parse_function(test::c_variant_source(q(2, 5)));
  return f;
}

template <class T>
const T& evidence_as(const Verdict& v) {
  EXPECT_TRUE(v.evidence.has_value()) << v.rule;
  return std::get<T>(*v.evidence);
}

TEST(Amenable, Examples) {
  EXPECT_TRUE(is_amenable(fixture("xsq")).is_proven());
  EXPECT_TRUE(is_amenable(fixture("ex55")).is_proven());
  auto z = is_amenable(fixture("zero"));
  ASSERT_TRUE(z.is_refuted());
  EXPECT_EQ(evidence_as<PointWitness>(z), (PointWitness{q(1), q(0)}));
  auto shifted = is_amenable(parse_function("piecewise\n[0,inf): x + 1"));
  ASSERT_TRUE(shifted.is_refuted());
  EXPECT_EQ(evidence_as<PointWitness>(shifted).x, 0);
  // A zero strictly inside the domain.
  auto dip = is_amenable(parse_function("piecewise\n[0,inf): (x - 2)^2 x"));
  ASSERT_TRUE(dip.is_refuted());
  EXPECT_EQ(evidence_as<PointWitness>(dip).x, q(2));
}

TEST(Increasing, Examples) {
  EXPECT_TRUE(is_increasing(fixture("staircase")).is_proven());
  EXPECT_TRUE(is_increasing(fixture("xsq")).is_proven());
  auto v = is_increasing(fixture("ex55"));
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(evidence_as<PairWitness>(v), (PairWitness{q(1), q(2), q(1), q(1, 2)}));
}

TEST(Concave, Examples) {
  EXPECT_TRUE(is_concave(fixture("x_over_1px")).is_proven());
  EXPECT_TRUE(is_concave(fixture("identity")).is_proven());
  auto v = is_concave(fixture("staircase"));
  ASSERT_TRUE(v.is_refuted());
  const auto& w = evidence_as<ChordWitness>(v);
  EXPECT_EQ(w.x1, q(9));
  EXPECT_EQ(w.x2, q(11));
  EXPECT_EQ(w.t, q(1, 2));
  EXPECT_EQ(w.f_mid, q(1));
  EXPECT_EQ(w.chord, q(3, 2));
}

TEST(Subadditive, Examples) {
  auto s = is_subadditive(fixture("staircase"));
  EXPECT_TRUE(s.is_proven());
  EXPECT_NE(s.rule.find("affine"), std::string::npos);
  auto x2 = is_subadditive(fixture("xsq"));
  ASSERT_TRUE(x2.is_refuted());
  EXPECT_EQ(evidence_as<SumWitness>(x2), (SumWitness{q(1), q(1), q(1), q(1), q(4)}));
  auto c = is_subadditive(fixture("x_over_1px"));
  EXPECT_TRUE(c.is_proven());
  EXPECT_NE(c.rule.find("concave"), std::string::npos);
}

TEST(RatioDecreasing, Examples) {
  EXPECT_TRUE(ratio_is_decreasing(fixture("x_over_1px"), 1000, 1).is_proven());
  EXPECT_TRUE(ratio_is_decreasing(fixture("identity"), 1000, 1).is_proven());
  auto v = ratio_is_decreasing(fixture("xsq"), 1000, 1);
  ASSERT_TRUE(v.is_refuted());
  const auto& w = evidence_as<PairWitness>(v);
  EXPECT_LT(w.a, w.b);
  EXPECT_LT(w.fa / w.a, w.fb / w.b);
}

TEST(TightlyBounded, Examples) {
  auto t = is_tightly_bounded(fixture("tight12"));
  ASSERT_TRUE(t.is_proven());
  EXPECT_EQ(t.value, ExtRational(q(1)));
  EXPECT_TRUE(is_tightly_bounded(fixture("x_over_1px")).is_refuted());
  EXPECT_TRUE(is_tightly_bounded(fixture("ex55")).is_refuted());
  auto b = evidence_as<BoundsWitness>(is_tightly_bounded(fixture("ex55")));
  EXPECT_EQ(b.inf, ExtRational(q(0)));
}

TEST(ConstantOnPositive, Examples) {
  auto step3 = parse_function("piecewise\n[0,0]: 0\n(0,inf): 3");
  auto c = is_constant_on_positive(step3);
  ASSERT_TRUE(c.is_proven());
  EXPECT_EQ(c.value, ExtRational(q(3)));
  auto x = is_constant_on_positive(fixture("identity"));
  ASSERT_TRUE(x.is_refuted());
  EXPECT_EQ(evidence_as<PairWitness>(x), (PairWitness{q(1), q(2), q(1), q(2)}));
  auto s = is_constant_on_positive(fixture("staircase"));
  ASSERT_TRUE(s.is_refuted());
  EXPECT_EQ(evidence_as<PairWitness>(s), (PairWitness{q(1), q(11), q(1), q(2)}));
}

TEST(Doubling, Examples) {
  EXPECT_TRUE(satisfies_doubling(fixture("ex55")).is_proven());
  EXPECT_TRUE(satisfies_doubling(fixture("xsq")).is_proven());
  auto v = satisfies_doubling(c_variant_2_5());
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(evidence_as<PairWitness>(v), (PairWitness{q(1), q(2), q(1), q(2, 5)}));
}

// Independent oracle for the doubling condition on the c-variant: scan the
// grid i/10 for i <= 30 for a pair a <= b with f(a) > 2 f(b).
TEST(Doubling, GridOracleOnCVariant) {
  const std::pair<long, long> cs[] = {{1, 10}, {2, 5}, {49, 100}, {1, 2}, {3, 5}, {1, 1}};
  for (auto [num, den] : cs) {
    Rational c = q(num, den);
    auto f = parse_function(test::c_variant_source(c));
    bool violated = false;
    for (long i = 0; i <= 30 && !violated; ++i) {
      for (long j = i; j <= 30; ++j) {
        Rational a = q(i, 10), b = q(j, 10);
        Rational fa = a <= 1 ? a : c;
        Rational fb = b <= 1 ? b : c;
        if (fa > 2 * fb) violated = true;
      }
    }
    EXPECT_EQ(satisfies_doubling(f).is_refuted(), violated) << to_string(c);
  }
}

TEST(Infimum, Examples) {
  auto step3 = parse_function("piecewise\n[0,0]: 0\n(0,inf): 3");
  auto i = infimum_positive(step3);
  EXPECT_EQ(i.inf, ExtRational(q(3)));
  EXPECT_TRUE(i.attained);
  i = infimum_positive(fixture("x_over_1px"));
  EXPECT_EQ(i.inf, ExtRational(q(0)));
  EXPECT_FALSE(i.attained);
  i = infimum_positive(fixture("g65"));
  EXPECT_EQ(i.inf, ExtRational(q(0)));
  EXPECT_FALSE(i.attained);
}

TEST(Continuity, AtZero) {
  EXPECT_TRUE(is_continuous_at_zero(fixture("ex55")).is_proven());
  EXPECT_TRUE(is_continuous_at_zero(fixture("x_over_1px")).is_proven());
  auto v = is_continuous_at_zero(fixture("step"));
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(evidence_as<LimitWitness>(v).limit, ExtRational(q(5)));
}

TEST(Continuity, Global) {
  EXPECT_TRUE(global_continuity_report(fixture("staircase")).continuous_everywhere);
  auto g = global_continuity_report(fixture("g65"));
  EXPECT_FALSE(g.continuous_everywhere);
  EXPECT_EQ(g.discontinuities, (std::vector<Rational>{q(1)}));
  auto s = global_continuity_report(fixture("step"));
  EXPECT_EQ(s.discontinuities, (std::vector<Rational>{q(0)}));
  EXPECT_TRUE(is_uniformly_continuous(fixture("x_over_1px")));
  EXPECT_FALSE(is_uniformly_continuous(fixture("xsq")));
}

// Seeded corpus of random affine functions plus the fixtures.
std::vector<PiecewiseFunction> corpus() {
  std::vector<PiecewiseFunction> out;
  for (const auto& name : test::fixture_names()) out.push_back(fixture(name));
  for (std::uint64_t s = 100; s < 140; ++s) {
    test::AffineOptions o;
    o.amenable_bias = s % 4 != 0;
    out.push_back(parse_function(test::random_affine_source(s, o)));
  }
  return out;
}

// Re-derives every refutation from its evidence with plain arithmetic.
void check_evidence(const PiecewiseFunction& f, const char* what, const Verdict& v) {
  if (!v.is_refuted()) return;
  ASSERT_TRUE(v.evidence) << what;
  const Evidence& e = *v.evidence;
  if (auto* p = std::get_if<PairWitness>(&e)) {
    EXPECT_EQ(p->fa, f(p->a)) << what;
    EXPECT_EQ(p->fb, f(p->b)) << what;
  } else if (auto* s = std::get_if<SumWitness>(&e)) {
    EXPECT_EQ(s->fsum, f(s->a + s->b)) << what;
    EXPECT_GT(s->fsum, f(s->a) + f(s->b)) << what;
  } else if (auto* c = std::get_if<ChordWitness>(&e)) {
    Rational mid = (1 - c->t) * c->x1 + c->t * c->x2;
    EXPECT_EQ(c->f_mid, f(mid)) << what;
    EXPECT_EQ(c->chord, (1 - c->t) * f(c->x1) + c->t * f(c->x2)) << what;
    EXPECT_LT(c->f_mid, c->chord) << what;
  } else if (auto* pt = std::get_if<PointWitness>(&e)) {
    EXPECT_EQ(pt->fx, f(pt->x)) << what;
  }
}

TEST(PropertyInvariants, RefutationsReverify) {
  for (const auto& f : corpus()) {
    check_evidence(f, "increasing", is_increasing(f));
    check_evidence(f, "concave", is_concave(f));
    check_evidence(f, "subadditive", is_subadditive(f));
    check_evidence(f, "doubling", satisfies_doubling(f));
    check_evidence(f, "constant", is_constant_on_positive(f));
    check_evidence(f, "amenable", is_amenable(f));
    auto inc = is_increasing(f);
    if (inc.is_refuted()) {
      const auto& p = std::get<PairWitness>(*inc.evidence);
      EXPECT_LT(p.a, p.b);
      EXPECT_GT(p.fa, p.fb);
    }
    auto dbl = satisfies_doubling(f);
    if (dbl.is_refuted()) {
      const auto& p = std::get<PairWitness>(*dbl.evidence);
      EXPECT_LE(p.a, p.b);
      EXPECT_GT(p.fa, 2 * p.fb);
    }
  }
}

TEST(PropertyInvariants, ExactOnAffineInputs) {
  for (std::uint64_t s = 200; s < 260; ++s) {
    test::AffineOptions o;
    o.amenable_bias = s % 5 != 0;
    auto f = parse_function(test::random_affine_source(s, o));
    EXPECT_FALSE(is_increasing(f).is_unknown()) << s;
    EXPECT_FALSE(is_concave(f).is_unknown()) << s;
    EXPECT_FALSE(is_subadditive(f).is_unknown()) << s;
    EXPECT_FALSE(is_tightly_bounded(f).is_unknown()) << s;
    EXPECT_FALSE(is_constant_on_positive(f).is_unknown()) << s;
    EXPECT_FALSE(satisfies_doubling(f).is_unknown()) << s;
  }
}

TEST(PropertyInvariants, ConcaveAmenableHasDecreasingRatio) {
  for (const auto& f : corpus()) {
    if (is_amenable(f).is_proven() && is_concave(f).is_proven()) {
      EXPECT_TRUE(ratio_is_decreasing(f, 1000, 3).is_proven()) << f.to_dsl();
    }
  }
}

TEST(PropertyInvariants, MonotoneAndDoublingHoldOnSamples) {
  Lcg rng(4242);
  for (const auto& f : corpus()) {
    bool inc = is_increasing(f).is_proven();
    bool dbl = satisfies_doubling(f).is_proven();
    for (int i = 0; i < 1000; ++i) {
      Rational a = test::random_point(rng, 30);
      Rational b = test::random_point(rng, 30);
      if (a > b) std::swap(a, b);
      if (inc) ASSERT_LE(f(a), f(b)) << f.to_dsl();
      if (dbl) ASSERT_LE(f(a), 2 * f(b)) << f.to_dsl();
    }
  }
}

// Brute-force subadditivity over the grid k/6, k <= 120, for affine inputs.
TEST(PropertyInvariants, SubadditiveAgreesWithGridOracle) {
  for (std::uint64_t s = 300; s < 330; ++s) {
    auto f = parse_function(test::random_affine_source(s));
    auto v = is_subadditive(f);
    ASSERT_FALSE(v.is_unknown());
    bool grid_violation = false;
    for (long i = 0; i <= 120 && !grid_violation; ++i) {
      for (long j = i; j <= 120; ++j) {
        Rational a = q(i, 6), b = q(j, 6);
        if (f(a + b) > f(a) + f(b)) {
          grid_violation = true;
          break;
        }
      }
    }
    if (grid_violation) EXPECT_TRUE(v.is_refuted()) << f.to_dsl();
  }
}

}  // namespace
}  // namespace umpf
