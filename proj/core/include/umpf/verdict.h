#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "umpf/distance_matrix.h"
#include "umpf/rational.h"

namespace umpf {

enum class Status { kProven, kRefuted, kUnknown };
std::string to_string(Status s);
Status parse_status(std::string_view text);

/// A single point: a positive zero of f, or f(0) != 0.
struct PointWitness {
  Rational x;
  Rational fx;
  friend bool operator==(const PointWitness&, const PointWitness&) = default;
};

/// Two arguments and their images, read against the violated inequality.
struct PairWitness {
  Rational a, b, fa, fb;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// f(a + b) > f(a) + f(b).
struct SumWitness {
  Rational a, b, fa, fb, fsum;
  friend bool operator==(const SumWitness&, const SumWitness&) = default;
};

/// f((1 - t) x1 + t x2) < (1 - t) f(x1) + t f(x2).
struct ChordWitness {
  Rational x1, x2, t;
  Rational f_mid;  // value at (1 - t) x1 + t x2
  Rational chord;  // (1 - t) f(x1) + t f(x2)
  friend bool operator==(const ChordWitness&, const ChordWitness&) = default;
};

/// One-sided limit at x disagreeing with what the property needs.
struct LimitWitness {
  Rational x;
  ExtRational limit;
  Rational value;
  friend bool operator==(const LimitWitness&, const LimitWitness&) = default;
};

struct BoundsWitness {
  ExtRational inf;
  bool inf_attained = false;
  ExtRational sup;
  bool sup_attained = false;
  friend bool operator==(const BoundsWitness&, const BoundsWitness&) = default;
};

/// A class-membership counterexample realized as a concrete finite space:
/// transforming `realized` by f breaks `failed_axiom`.
struct Witness {
  enum class Kind {
    kMonotonePair,
    kZeroValue,
    kNonzeroAtOrigin,
    kDoublingPair,
    kNonConstantPair,
    kTripletM,
    kTripletMU
  };

  Kind kind = Kind::kTripletM;
  std::variant<PairWitness, PointWitness, Triplet> payload;
  DistanceMatrix realized;
  AxiomViolation failed_axiom;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(Witness::Kind kind);
Witness::Kind parse_witness_kind(std::string_view text);

using Evidence = std::variant<PointWitness, PairWitness, SumWitness, ChordWitness, LimitWitness,
                              BoundsWitness, AxiomViolation, Witness>;

struct Verdict {
  Status status = Status::kUnknown;
  std::optional<Evidence> evidence;
  std::string rule;
  /// A recorded constant (c of a constant function, v of a tight bound).
  std::optional<ExtRational> value;

  static Verdict proven(std::string rule, std::optional<ExtRational> value = {}) {
    return {Status::kProven, std::nullopt, std::move(rule), std::move(value)};
  }
  static Verdict refuted(std::string rule, Evidence evidence) {
    return {Status::kRefuted, std::move(evidence), std::move(rule), std::nullopt};
  }
  static Verdict unknown(std::string rule) {
    return {Status::kUnknown, std::nullopt, std::move(rule), std::nullopt};
  }

  bool is_proven() const { return status == Status::kProven; }
  bool is_refuted() const { return status == Status::kRefuted; }
  bool is_unknown() const { return status == Status::kUnknown; }
  const Witness* witness() const {
    return evidence ? std::get_if<Witness>(&*evidence) : nullptr;
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string describe(const Evidence& e);

}  // namespace umpf
