#pragma once

#include <cstdint>
#include <vector>

#include "umpf/piecewise.h"
#include "umpf/verdict.h"

namespace umpf {

/// Effort limits for searches that can only refute.
struct SearchBudget {
  size_t evaluations = 20000;
  std::uint64_t seed = 1;
};

Verdict is_amenable(const PiecewiseFunction& f);
Verdict is_increasing(const PiecewiseFunction& f);
Verdict is_concave(const PiecewiseFunction& f);
Verdict is_subadditive(const PiecewiseFunction& f, const SearchBudget& budget = {});
/// Sampled check that f(x)/x does not increase on (0, inf).
Verdict ratio_is_decreasing(const PiecewiseFunction& f, size_t samples, std::uint64_t seed);
Verdict is_tightly_bounded(const PiecewiseFunction& f);
Verdict is_constant_on_positive(const PiecewiseFunction& f);
/// f(a) <= 2 f(b) for all 0 <= a <= b.
Verdict satisfies_doubling(const PiecewiseFunction& f);

struct InfimumReport {
  ExtRational inf;
  bool attained = false;
};

/// Infimum over (0, inf).
InfimumReport infimum_positive(const PiecewiseFunction& f);
Verdict is_continuous_at_zero(const PiecewiseFunction& f);

struct ContinuityReport {
  bool continuous_everywhere = true;
  std::vector<Rational> discontinuities;  // ascending; includes 0 when f jumps there
};

ContinuityReport global_continuity_report(const PiecewiseFunction& f);

/// Continuous everywhere with at most linear growth at infinity.
bool is_uniformly_continuous(const PiecewiseFunction& f);

}  // namespace umpf
