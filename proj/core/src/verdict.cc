#include "umpf/verdict.h"

#include <stdexcept>

namespace umpf {

std::string to_string(Status s) {
  switch (s) {
    case Status::kProven: return "Proven";
    case Status::kRefuted: return "Refuted";
    case Status::kUnknown: return "Unknown";
  }
  return "Unknown";
}

Status parse_status(std::string_view text) {
  if (text == "Proven") return Status::kProven;
  if (text == "Refuted") return Status::kRefuted;
  if (text == "Unknown") return Status::kUnknown;
  throw std::invalid_argument("unknown status " + std::string(text));
}

namespace {
constexpr std::pair<Witness::Kind, const char*> kKindNames[] = {
    {Witness::Kind::kMonotonePair, "MonotonePair"},
    {Witness::Kind::kZeroValue, "ZeroValue"},
    {Witness::Kind::kNonzeroAtOrigin, "NonzeroAtOrigin"},
    {Witness::Kind::kDoublingPair, "DoublingPair"},
    {Witness::Kind::kNonConstantPair, "NonConstantPair"},
    {Witness::Kind::kTripletM, "TripletM"},
    {Witness::Kind::kTripletMU, "TripletMU"},
};
}  // namespace

std::string to_string(Witness::Kind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

Witness::Kind parse_witness_kind(std::string_view text) {
  for (auto [k, name] : kKindNames) {
    if (text == name) return k;
  }
  throw std::invalid_argument("unknown witness kind " + std::string(text));
}

std::string describe(const Evidence& e) {
  struct Visitor {
    std::string operator()(const PointWitness& w) const {
      return "f(" + to_string(w.x) + ") = " + to_string(w.fx);
    }
    std::string operator()(const PairWitness& w) const {
      return "f(" + to_string(w.a) + ") = " + to_string(w.fa) + ", f(" + to_string(w.b) +
             ") = " + to_string(w.fb);
    }
    std::string operator()(const SumWitness& w) const {
      return "f(" + to_string(w.a) + " + " + to_string(w.b) + ") = " + to_string(w.fsum) +
             " > " + to_string(w.fa) + " + " + to_string(w.fb);
    }
    std::string operator()(const ChordWitness& w) const {
      return "x1 = " + to_string(w.x1) + ", x2 = " + to_string(w.x2) + ", t = " +
             to_string(w.t) + ": " + to_string(w.f_mid) + " < " + to_string(w.chord);
    }
    std::string operator()(const LimitWitness& w) const {
      return "limit at " + to_string(w.x) + " is " + to_string(w.limit) + ", value " +
             to_string(w.value);
    }
    std::string operator()(const BoundsWitness& w) const {
      return "inf " + to_string(w.inf) + (w.inf_attained ? " (attained)" : "") + ", sup " +
             to_string(w.sup) + (w.sup_attained ? " (attained)" : "");
    }
    std::string operator()(const AxiomViolation& v) const { return to_string(v); }
    std::string operator()(const Witness& w) const {
      std::string payload = std::visit(
          [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Triplet>) {
              return "(" + to_string(p.a) + ", " + to_string(p.b) + ", " + to_string(p.c) + ")";
            } else if constexpr (std::is_same_v<T, PairWitness>) {
              return "(" + to_string(p.a) + ", " + to_string(p.b) + ")";
            } else {
              return "x = " + to_string(p.x);
            }
          },
          w.payload);
      return to_string(w.kind) + " " + payload + "; image breaks " + to_string(w.failed_axiom);
    }
  };
  return std::visit(Visitor{}, e);
}

}  // namespace umpf
