#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umpf/classifier.h"
#include "umpf/finspace.h"
#include "umpf/properties.h"
#include "umpf/verdict.h"

namespace umpf {

/// A witness, or none. `exhaustive` distinguishes proven absence from an
/// incomplete search that merely found nothing.
struct SearchResult {
  std::optional<Witness> witness;
  bool exhaustive = false;
};

std::optional<Witness> find_U_violation(const PiecewiseFunction& f);
SearchResult find_M_violation(const PiecewiseFunction& f, size_t budget, std::uint64_t seed);
SearchResult find_UM_violation(const PiecewiseFunction& f);
std::optional<Witness> find_MU_violation(const PiecewiseFunction& f);

/// Witness for f(0) != 0 or a positive zero, if `amenable` refutes.
std::optional<Witness> amenability_witness(const PiecewiseFunction& f, const Verdict& amenable);

/// Re-derives the failed axiom from the realized space and f, and re-evaluates
/// the payload; true iff everything matches.
bool verify_witness(const Witness& w, const PiecewiseFunction& f);

/// Rebuilds `w` with the failed axiom the given class's validator reports.
Witness rewitness_for_ultrametric(const Witness& w, const PiecewiseFunction& f);

struct Disagreement {
  std::string claim;  // e.g. "U Proven"
  std::string space;  // "ultrametric" or "metric"
  size_t n = 0;
  std::uint64_t seed = 0;
  DistanceMatrix matrix;
  std::string failure;
};

struct CrossValidation {
  size_t checked = 0;
  size_t image_metric = 0;       // images passing the metric axioms
  size_t image_ultrametric = 0;  // images passing the ultrametric axioms
  size_t image_two_valued = 0;
  std::vector<Disagreement> disagreements;
};

/// Transforms `spaces` random ultrametric and metric spaces (sizes cycling
/// 2..12) and records every outcome contradicting a Proven class verdict.
CrossValidation cross_validate(const PiecewiseFunction& f, const ClassReport& report,
                               size_t spaces, std::uint64_t seed);

}  // namespace umpf
