#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.h"
#include "umpf/distance_matrix.h"
#include "umpf/errors.h"
#include "umpf/finspace.h"

namespace umpf {
namespace {

using test::q;

DistanceMatrix tri(const Rational& a, const Rational& b, const Rational& c) {
  return DistanceMatrix({{0, a, b}, {a, 0, c}, {b, c, 0}});
}

const AxiomViolation& violation_of(const Verdict& v) {
  return std::get<AxiomViolation>(*v.evidence);
}

TEST(DistanceMatrix, ContainerInvariants) {
  EXPECT_THROW(DistanceMatrix({{0, 1}, {2, 0}}), MatrixFormatError);
  EXPECT_THROW(DistanceMatrix({{1, 1}, {1, 0}}), MatrixFormatError);
  EXPECT_THROW(DistanceMatrix({{0, -1}, {-1, 0}}), MatrixFormatError);
  EXPECT_THROW(DistanceMatrix({{0, 1}, {1}}), MatrixFormatError);
  DistanceMatrix d(3);
  d.set(0, 2, q(5));
  EXPECT_EQ(d(2, 0), q(5));
  EXPECT_THROW(d.set(1, 1, q(1)), MatrixFormatError);
}

TEST(DistanceMatrix, CsvRoundTrip) {
  auto d = parse_matrix_csv("0, 1/2, 0.25\n1/2,0,3\n0.25,3,0\n");
  EXPECT_EQ(d(0, 2), q(1, 4));
  EXPECT_EQ(to_csv(d), "0,1/2,1/4\n1/2,0,3\n1/4,3,0\n");
  EXPECT_EQ(parse_matrix_csv(to_csv(d)), d);
  EXPECT_THROW(load_matrix_csv(test::data_dir() / "asymmetric.csv"), MatrixFormatError);
  EXPECT_THROW(load_matrix_csv(test::data_dir() / "malformed.csv"), MatrixFormatError);
  EXPECT_THROW(load_matrix_csv(test::data_dir() / "ragged.csv"), MatrixFormatError);
}

TEST(Triplet, Classification) {
  auto t = make_triplet(q(1), q(2), q(2));
  EXPECT_TRUE(t.in_delta);
  EXPECT_TRUE(t.in_delta_inf);
  EXPECT_EQ(t.shape, Triplet::Shape::kABeqC);
  EXPECT_EQ(make_triplet(q(2), q(1), q(2)).shape, Triplet::Shape::kBCeqA);
  EXPECT_EQ(make_triplet(q(2), q(2), q(1)).shape, Triplet::Shape::kCABeqB);
  auto bad = make_triplet(q(2), q(1), q(1));
  EXPECT_TRUE(bad.in_delta);
  EXPECT_FALSE(bad.in_delta_inf);
  EXPECT_EQ(bad.shape, Triplet::Shape::kNone);
  EXPECT_FALSE(make_triplet(q(5), q(1), q(1)).in_delta);
  EXPECT_THROW(make_triplet(q(-1), q(1), q(1)), std::invalid_argument);
}

TEST(Validators, Metric) {
  auto v = validate_metric(tri(q(1), q(4), q(1)));
  ASSERT_TRUE(v.is_refuted());
  const auto& a = violation_of(v);
  EXPECT_EQ(a.axiom, Axiom::kM3);
  EXPECT_EQ(a.i, 0u);
  EXPECT_EQ(a.j, 2u);
  EXPECT_EQ(a.k, 1u);
  EXPECT_EQ(a.lhs, q(4));
  EXPECT_EQ(a.rhs, q(2));
  // Points {1, 2/3, 2}: d = (1/3, 1, 4/3).
  EXPECT_TRUE(validate_metric(tri(q(1, 3), q(1), q(4, 3))).is_proven());
  EXPECT_TRUE(validate_metric(DistanceMatrix(1)).is_proven());
  auto m1 = validate_metric(tri(q(0), q(1), q(1)));
  ASSERT_TRUE(m1.is_refuted());
  EXPECT_EQ(violation_of(m1).axiom, Axiom::kM1);
}

TEST(Validators, Ultrametric) {
  EXPECT_TRUE(validate_ultrametric(tri(q(3), q(3), q(3))).is_proven());
  EXPECT_TRUE(validate_ultrametric(tri(q(1), q(2), q(2))).is_proven());
  auto v = validate_ultrametric(tri(q(2), q(1), q(1)));
  ASSERT_TRUE(v.is_refuted());
  const auto& a = violation_of(v);
  EXPECT_EQ(a.axiom, Axiom::kU3);
  EXPECT_EQ(a.lhs, q(2));
  EXPECT_EQ(a.rhs, q(1));
  EXPECT_EQ(to_string(a), "U3 at (1, 2; via 3): 2 > max = 1");
}

TEST(Transform, Examples) {
  auto line = load_matrix_csv(test::data_dir() / "line123.csv");
  auto img = transform_space(line, test::fixture("xsq"));
  EXPECT_EQ(img(0, 2), q(4));
  EXPECT_TRUE(validate_metric(img).is_refuted());
  auto step = transform_space(random_metric(7, 3), test::fixture("step"));
  for (size_t i = 0; i < 7; ++i) {
    for (size_t j = 0; j < 7; ++j) EXPECT_EQ(step(i, j), i == j ? q(0) : q(5));
  }
  EXPECT_EQ(transform_space(line, test::fixture("identity")), line);
  EXPECT_THROW(transform_space(line, parse_function("piecewise\n[0,inf): x + 1")),
               NonAmenableDiagonal);
}

TEST(Realize, Examples) {
  auto m = realize_triplet(make_triplet(q(1), q(10), q(10)), RealizeMode::kMetric);
  EXPECT_TRUE(validate_metric(m).is_proven());
  auto u = realize_triplet(make_triplet(q(1), q(3), q(3)), RealizeMode::kUltrametric);
  EXPECT_TRUE(validate_ultrametric(u).is_proven());
  EXPECT_THROW(realize_triplet(make_triplet(q(5), q(1), q(1)), RealizeMode::kMetric),
               NotRealizable);
  EXPECT_THROW(realize_triplet(make_triplet(q(2), q(1), q(1)), RealizeMode::kUltrametric),
               NotRealizable);
}

TEST(Generators, SmallCases) {
  EXPECT_EQ(random_ultrametric(1, 5), DistanceMatrix(1));
  EXPECT_EQ(random_metric(1, 5), DistanceMatrix(1));
  EXPECT_GT(random_ultrametric(2, 5)(0, 1), 0);
  EXPECT_GT(random_metric(2, 5)(0, 1), 0);
  EXPECT_TRUE(validate_ultrametric(random_ultrametric(8, 42)).is_proven());
  EXPECT_TRUE(validate_metric(random_metric(8, 7)).is_proven());
  EXPECT_EQ(random_metric(9, 11), random_metric(9, 11));
  EXPECT_NE(random_metric(9, 11), random_metric(9, 12));
  EXPECT_THROW(random_metric(kMaxGeneratedPoints + 1, 1), std::exception);
}

// Shortest paths by repeated relaxation, independent of the Floyd loop order.
DistanceMatrix bellman_ford_closure(const DistanceMatrix& d) {
  size_t n = d.size();
  auto rows = d.rows();
  for (size_t round = 0; round < n; ++round) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
          if (rows[i][k] + d(k, j) < rows[i][j]) rows[i][j] = rows[i][k] + d(k, j);
        }
      }
    }
  }
  return DistanceMatrix(rows);
}

TEST(MetricClosure, CapsLongEdge) {
  auto c = metric_closure(tri(q(1), q(1), q(5)));
  EXPECT_EQ(c(1, 2), q(2));
}

TEST(MetricClosure, MatchesRelaxationOracle) {
  Lcg rng(77);
  for (int t = 0; t < 40; ++t) {
    size_t n = 2 + rng.below(7);
    DistanceMatrix d(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) d.set(i, j, rng.draw());
    }
    EXPECT_EQ(metric_closure(d), bellman_ford_closure(d));
  }
}

TEST(ChainBound, Examples) {
  auto u = random_ultrametric(6, 9);
  auto two = chain_bound_check(u, {1, 4});
  EXPECT_EQ(two.lhs, two.rhs);
  EXPECT_TRUE(two.holds);
  auto eq = chain_bound_check(tri(q(2), q(2), q(2)), {0, 1, 2, 0, 1});
  EXPECT_EQ(eq.lhs, q(2));
  EXPECT_EQ(eq.rhs, q(2));
  EXPECT_THROW(chain_bound_check(tri(q(2), q(1), q(1)), {0, 2, 1}), PreconditionError);
}

TEST(ChainBound, RandomPathsOnSeededSpace) {
  auto u = random_ultrametric(8, 42);
  Lcg rng(1);
  for (int i = 0; i < 1000; ++i) {
    std::vector<size_t> path(2 + rng.below(8));
    for (auto& p : path) p = rng.below(8);
    auto r = chain_bound_check(u, path);
    Rational largest = 0;
    for (size_t k = 0; k + 1 < path.size(); ++k) largest = std::max(largest, u(path[k], path[k + 1]));
    EXPECT_EQ(r.rhs, largest);
    EXPECT_EQ(r.lhs, u(path.front(), path.back()));
    ASSERT_TRUE(r.holds);
  }
}

TEST(Discreteness, Examples) {
  auto img = transform_space(random_metric(6, 4), test::fixture("step"));
  auto p = discreteness_profile(img);
  EXPECT_TRUE(p.two_valued);
  EXPECT_EQ(p.min_positive, ExtRational(q(5)));
  auto three = discreteness_profile(tri(q(1), q(1, 3), q(4, 3)));
  EXPECT_FALSE(three.two_valued);
  EXPECT_EQ(three.value_set, (std::vector<Rational>{q(1, 3), q(1), q(4, 3)}));
  EXPECT_TRUE(discreteness_profile(DistanceMatrix(1)).min_positive.is_infinite());
}

// Minimax over all simple paths, by enumerating vertex orders.
DistanceMatrix minimax_oracle(const DistanceMatrix& d) {
  size_t n = d.size();
  DistanceMatrix out(n);
  for (size_t s = 0; s < n; ++s) {
    for (size_t t = s + 1; t < n; ++t) {
      Rational best = d(s, t);
      std::vector<size_t> others;
      for (size_t v = 0; v < n; ++v) {
        if (v != s && v != t) others.push_back(v);
      }
      for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
        std::vector<size_t> mid;
        for (size_t b = 0; b < others.size(); ++b) {
          if (mask & (1u << b)) mid.push_back(others[b]);
        }
        do {
          Rational worst = 0;
          size_t prev = s;
          for (size_t v : mid) {
            worst = std::max(worst, d(prev, v));
            prev = v;
          }
          worst = std::max(worst, d(prev, t));
          best = std::min(best, worst);
        } while (std::next_permutation(mid.begin(), mid.end()));
      }
      out.set(s, t, best);
    }
  }
  return out;
}

TEST(Subdominant, Examples) {
  auto u = random_ultrametric(6, 3);
  EXPECT_EQ(subdominant_ultrametric(u), u);
  EXPECT_EQ(subdominant_ultrametric(tri(q(2), q(1), q(1))), tri(q(1), q(1), q(1)));
  auto two = random_metric(2, 8);
  EXPECT_EQ(subdominant_ultrametric(two), two);
  EXPECT_THROW(subdominant_ultrametric(tri(q(5), q(1), q(1))), PreconditionError);
}

TEST(Subdominant, MatchesPathOracle) {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    auto d = random_metric(2 + s % 5, s);
    auto u = subdominant_ultrametric(d);
    EXPECT_EQ(u, minimax_oracle(d));
    EXPECT_TRUE(validate_ultrametric(u).is_proven());
    for (size_t i = 0; i < d.size(); ++i) {
      for (size_t j = 0; j < d.size(); ++j) EXPECT_LE(u(i, j), d(i, j));
    }
  }
}

TEST(FinspaceProperties, UltrametricImpliesMetric) {
  Lcg rng(12);
  for (int t = 0; t < 300; ++t) {
    size_t n = 2 + rng.below(5);
    DistanceMatrix d(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) d.set(i, j, make_rational(static_cast<long>(rng.below(4)), 1));
    }
    if (validate_ultrametric(d).is_proven()) EXPECT_TRUE(validate_metric(d).is_proven());
  }
}

TEST(FinspaceProperties, GeneratorsPassTheirValidators) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Lcg seeds(seed);
    for (int i = 0; i < 200; ++i) {
      size_t n = 1 + seeds.below(16);
      ASSERT_TRUE(validate_ultrametric(random_ultrametric(n, seeds.next())).is_proven());
      ASSERT_TRUE(validate_metric(random_metric(n, seeds.next())).is_proven());
    }
  }
}

TEST(FinspaceProperties, UltraTripletsHaveAShape) {
  Lcg rng(55);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational a = make_rational(static_cast<long>(1 + rng.below(5)), 1);
    Rational b = make_rational(static_cast<long>(1 + rng.below(5)), 1);
    Rational c = make_rational(static_cast<long>(1 + rng.below(5)), 1);
    auto t = make_triplet(a, b, c);
    if (!t.in_delta_inf) continue;
    ++hits;
    ASSERT_NE(t.shape, Triplet::Shape::kNone);
    auto d = realize_triplet(t, RealizeMode::kUltrametric);
    EXPECT_EQ(d(0, 1), a);
    EXPECT_EQ(d(0, 2), b);
    EXPECT_EQ(d(1, 2), c);
  }
  EXPECT_GT(hits, 1000);
}

}  // namespace
}  // namespace umpf
