#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "umpf/classifier.h"
#include "umpf/verdict.h"

namespace umpf {

inline constexpr const char* kToolName = "umpf";
inline constexpr const char* kToolVersion = "0.3.0";

/// Everything `classify` reports about one function.
struct ReportDocument {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string function_sha256;
  std::string function_source;  // normalized DSL
  ClassReport report;
  std::vector<Witness> witnesses;
  std::optional<double> timing_ms;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// Rationals travel as "p/q" strings; +infinity as "inf".
void to_json(nlohmann::ordered_json& j, const DistanceMatrix& d);
void from_json(const nlohmann::ordered_json& j, DistanceMatrix& d);
void to_json(nlohmann::ordered_json& j, const AxiomViolation& v);
void from_json(const nlohmann::ordered_json& j, AxiomViolation& v);
void to_json(nlohmann::ordered_json& j, const Triplet& t);
void from_json(const nlohmann::ordered_json& j, Triplet& t);
void to_json(nlohmann::ordered_json& j, const Witness& w);
void from_json(const nlohmann::ordered_json& j, Witness& w);
void to_json(nlohmann::ordered_json& j, const Verdict& v);
void from_json(const nlohmann::ordered_json& j, Verdict& v);
void to_json(nlohmann::ordered_json& j, const ClassReport& r);
void from_json(const nlohmann::ordered_json& j, ClassReport& r);
void to_json(nlohmann::ordered_json& j, const ReportDocument& d);
void from_json(const nlohmann::ordered_json& j, ReportDocument& d);

std::string serialize(const ReportDocument& d);
ReportDocument parse_report(const std::string& json_text);

/// Human-readable summary.
std::string render_text(const ReportDocument& d);
std::string render_witness_text(const Witness& w);

}  // namespace umpf
