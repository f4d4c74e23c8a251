#pragma once

#include <cstdint>
#include <vector>

#include "umpf/distance_matrix.h"
#include "umpf/piecewise.h"
#include "umpf/verdict.h"

namespace umpf {

inline constexpr size_t kMaxGeneratedPoints = 64;

/// M1 then M3 over triples in lexicographic (i, j, k) order; the first
/// violation is the Refuted evidence.
Verdict validate_metric(const DistanceMatrix& d);
/// M1 then U3, same order.
Verdict validate_ultrametric(const DistanceMatrix& d);

/// Entrywise f o d. Throws NonAmenableDiagonal when f(0) != 0.
DistanceMatrix transform_space(const DistanceMatrix& d, const PiecewiseFunction& f);

enum class RealizeMode { kMetric, kUltrametric };

/// Three points with d(0,1) = a, d(0,2) = b, d(1,2) = c. Throws NotRealizable
/// when the triplet is outside the required set.
DistanceMatrix realize_triplet(const Triplet& t, RealizeMode mode);

/// Leaves of a random recursive bipartition with heights decreasing away from
/// the root; d = height of the lowest common ancestor.
DistanceMatrix random_ultrametric(size_t n, std::uint64_t seed);
/// Random positive matrix closed under shortest paths.
DistanceMatrix random_metric(size_t n, std::uint64_t seed);
/// All-pairs shortest-path closure (Floyd-Warshall).
DistanceMatrix metric_closure(const DistanceMatrix& d);

struct ChainBound {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// d(first, last) against the largest step along `path`. Requires an
/// ultrametric (PreconditionError otherwise) and at least two points.
ChainBound chain_bound_check(const DistanceMatrix& d, const std::vector<size_t>& path);

struct DiscretenessProfile {
  ExtRational min_positive;        // infinity for a single point
  std::vector<Rational> value_set;  // distinct off-diagonal values, ascending
  bool two_valued = false;          // exactly one off-diagonal value
};

DiscretenessProfile discreteness_profile(const DistanceMatrix& d);

/// Largest ultrametric below a metric: minimax path weights on a minimum
/// spanning tree. Throws PreconditionError if d is not a metric.
DistanceMatrix subdominant_ultrametric(const DistanceMatrix& d);

}  // namespace umpf
