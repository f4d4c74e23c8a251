#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umpf/piecewise.h"
#include "umpf/properties.h"
#include "umpf/verdict.h"

namespace umpf {

struct PropertyVerdicts {
  Verdict amenable;
  Verdict increasing;
  Verdict concave;
  Verdict subadditive;
  Verdict tightly_bounded;
  Verdict constant_on_positive;
  Verdict doubling;

  friend bool operator==(const PropertyVerdicts&, const PropertyVerdicts&) = default;
};

struct ContinuityProfile {
  bool at_zero = false;
  bool everywhere = false;
  bool uniformly_continuous = false;
  std::optional<ExtRational> inf_positive;  // empty when not exactly computable
  bool inf_attained = false;
  std::vector<Rational> discontinuities;
  /// Failed consistency assertions; nonempty means a library bug.
  std::vector<std::string> consistency_notes;

  friend bool operator==(const ContinuityProfile&, const ContinuityProfile&) = default;
};

struct ClassReport {
  Verdict in_U;
  Verdict in_MU;
  Verdict in_UM;
  Verdict in_M;
  PropertyVerdicts properties;
  ContinuityProfile continuity;
  std::vector<std::string> rules_fired;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

Verdict classify_U(const PiecewiseFunction& f);
Verdict classify_MU(const PiecewiseFunction& f);
Verdict classify_UM(const PiecewiseFunction& f);
Verdict classify_M(const PiecewiseFunction& f, const SearchBudget& budget = {});

/// All four classes and the property verdicts, made mutually consistent with
/// the inclusions MU in U and M, and U, M in UM.
ClassReport classify_all(const PiecewiseFunction& f, const SearchBudget& budget = {});

/// Broken inclusions or amenability guards, one message each.
std::vector<std::string> validate_inclusions(const ClassReport& report);

ContinuityProfile continuity_profile(const PiecewiseFunction& f, const ClassReport& report);

}  // namespace umpf
