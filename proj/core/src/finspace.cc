#include "umpf/finspace.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "umpf/errors.h"
#include "umpf/lcg.h"

namespace umpf {
namespace {

std::optional<AxiomViolation> first_m1(const DistanceMatrix& d) {
  for (size_t i = 0; i < d.size(); ++i) {
    for (size_t j = i + 1; j < d.size(); ++j) {
      if (sgn(d(i, j)) == 0) return AxiomViolation{Axiom::kM1, i, j, std::nullopt, 0, 0};
    }
  }
  return std::nullopt;
}

template <typename Bound>
std::optional<AxiomViolation> first_triangle(const DistanceMatrix& d, Axiom axiom,
                                             Bound bound) {
  size_t n = d.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Rational rhs = bound(d(i, k), d(k, j));
        if (d(i, j) > rhs) return AxiomViolation{axiom, i, j, k, d(i, j), rhs};
      }
    }
  }
  return std::nullopt;
}

Verdict from_violation(const std::optional<AxiomViolation>& v, const char* rule) {
  if (v) return Verdict::refuted(rule, *v);
  return Verdict::proven(rule);
}

}  // namespace

Verdict validate_metric(const DistanceMatrix& d) {
  if (auto v = first_m1(d)) return Verdict::refuted("metric axioms", *v);
  return from_violation(
      first_triangle(d, Axiom::kM3,
                     [](const Rational& x, const Rational& y) { return Rational(x + y); }),
      "metric axioms");
}

Verdict validate_ultrametric(const DistanceMatrix& d) {
  if (auto v = first_m1(d)) return Verdict::refuted("ultrametric axioms", *v);
  return from_violation(
      first_triangle(d, Axiom::kU3,
                     [](const Rational& x, const Rational& y) { return std::max(x, y); }),
      "ultrametric axioms");
}

DistanceMatrix transform_space(const DistanceMatrix& d, const PiecewiseFunction& f) {
  Rational f0 = f(Rational(0));
  if (f0 != 0) throw NonAmenableDiagonal("f(0) = " + to_string(f0) + " is not 0");
  DistanceMatrix out(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    for (size_t j = i + 1; j < d.size(); ++j) out.set(i, j, f(d(i, j)));
  }
  return out;
}

DistanceMatrix realize_triplet(const Triplet& t, RealizeMode mode) {
  if (mode == RealizeMode::kMetric && !t.in_delta) {
    throw NotRealizable("(" + to_string(t.a) + ", " + to_string(t.b) + ", " + to_string(t.c) +
                        ") is not a triangle triplet");
  }
  if (mode == RealizeMode::kUltrametric && !t.in_delta_inf) {
    throw NotRealizable("(" + to_string(t.a) + ", " + to_string(t.b) + ", " + to_string(t.c) +
                        ") is not an ultra triangle triplet");
  }
  DistanceMatrix d(3);
  d.set(0, 1, t.a);
  d.set(0, 2, t.b);
  d.set(1, 2, t.c);
  return d;
}

namespace {

void split(std::vector<size_t>::iterator first, std::vector<size_t>::iterator last,
           const Rational& height, Lcg& rng, DistanceMatrix& d) {
  auto size = static_cast<std::uint64_t>(last - first);
  if (size < 2) return;
  auto cut = first + static_cast<std::ptrdiff_t>(1 + rng.below(size - 1));
  for (auto i = first; i != cut; ++i) {
    for (auto j = cut; j != last; ++j) d.set(*i, *j, height);
  }
  Rational left = height / (1 + rng.draw());
  Rational right = height / (1 + rng.draw());
  split(first, cut, left, rng, d);
  split(cut, last, right, rng, d);
}

void check_size(size_t n) {
  if (n < 1 || n > kMaxGeneratedPoints) {
    throw PreconditionError("space size must be in [1, " +
                            std::to_string(kMaxGeneratedPoints) + "]");
  }
}

}  // namespace

DistanceMatrix random_ultrametric(size_t n, std::uint64_t seed) {
  check_size(n);
  Lcg rng(seed);
  std::vector<size_t> leaves(n);
  std::iota(leaves.begin(), leaves.end(), 0);
  for (size_t i = n; i > 1; --i) std::swap(leaves[i - 1], leaves[rng.below(i)]);
  DistanceMatrix d(n);
  split(leaves.begin(), leaves.end(), rng.draw(), rng, d);
  return d;
}

DistanceMatrix random_metric(size_t n, std::uint64_t seed) {
  check_size(n);
  Lcg rng(seed);
  DistanceMatrix d(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Rational v = rng.draw();
      while (sgn(v) == 0) v = rng.draw();
      d.set(i, j, v);
    }
  }
  return metric_closure(d);
}

DistanceMatrix metric_closure(const DistanceMatrix& d) {
  size_t n = d.size();
  auto rows = d.rows();
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        Rational via = rows[i][k] + rows[k][j];
        if (via < rows[i][j]) rows[i][j] = via;
      }
    }
  }
  return DistanceMatrix(std::move(rows));
}

ChainBound chain_bound_check(const DistanceMatrix& d, const std::vector<size_t>& path) {
  if (path.size() < 2) throw PreconditionError("a chain needs at least two points");
  for (size_t p : path) {
    if (p >= d.size()) throw PreconditionError("path index out of range");
  }
  if (!validate_ultrametric(d).is_proven()) {
    throw PreconditionError("chain bound requires an ultrametric");
  }
  ChainBound r;
  r.lhs = d(path.front(), path.back());
  r.rhs = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) r.rhs = std::max(r.rhs, d(path[i], path[i + 1]));
  r.holds = r.lhs <= r.rhs;
  return r;
}

DiscretenessProfile discreteness_profile(const DistanceMatrix& d) {
  std::set<Rational> values;
  for (size_t i = 0; i < d.size(); ++i) {
    for (size_t j = i + 1; j < d.size(); ++j) values.insert(d(i, j));
  }
  DiscretenessProfile p;
  p.value_set.assign(values.begin(), values.end());
  p.min_positive = ExtRational::infinity();
  for (const auto& v : p.value_set) {
    if (sgn(v) > 0) {
      p.min_positive = v;
      break;
    }
  }
  p.two_valued = p.value_set.size() == 1;
  return p;
}

DistanceMatrix subdominant_ultrametric(const DistanceMatrix& d) {
  if (!validate_metric(d).is_proven()) {
    throw PreconditionError("subdominant ultrametric requires a metric");
  }
  size_t n = d.size();
  auto rows = d.rows();
  // Minimax path closure; each entry ends as the largest edge on the
  // spanning-tree path, which is the subdominant ultrametric.
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational via = std::max(rows[i][k], rows[k][j]);
        if (via < rows[i][j]) rows[i][j] = via;
      }
    }
  }
  return DistanceMatrix(std::move(rows));
}

}  // namespace umpf
