#include "umpf/report.h"

#include <sstream>

namespace umpf {

using nlohmann::ordered_json;

namespace {

std::string q(const Rational& r) { return to_string(r); }
std::string q(const ExtRational& r) { return to_string(r); }
Rational rat(const ordered_json& j) { return parse_rational(j.get<std::string>()); }
ExtRational ext(const ordered_json& j) { return parse_ext_rational(j.get<std::string>()); }

ordered_json pair_json(const PairWitness& p) {
  return {{"a", q(p.a)}, {"b", q(p.b)}, {"fa", q(p.fa)}, {"fb", q(p.fb)}};
}
PairWitness pair_from(const ordered_json& j) {
  return {rat(j.at("a")), rat(j.at("b")), rat(j.at("fa")), rat(j.at("fb"))};
}
ordered_json point_json(const PointWitness& p) { return {{"x", q(p.x)}, {"fx", q(p.fx)}}; }
PointWitness point_from(const ordered_json& j) { return {rat(j.at("x")), rat(j.at("fx"))}; }

ordered_json evidence_json(const Evidence& e) {
  struct Visitor {
    ordered_json operator()(const PointWitness& w) const {
      ordered_json j{{"type", "point"}};
      j.update(point_json(w));
      return j;
    }
    ordered_json operator()(const PairWitness& w) const {
      ordered_json j{{"type", "pair"}};
      j.update(pair_json(w));
      return j;
    }
    ordered_json operator()(const SumWitness& w) const {
      return {{"type", "sum"}, {"a", q(w.a)},   {"b", q(w.b)},
              {"fa", q(w.fa)}, {"fb", q(w.fb)}, {"fsum", q(w.fsum)}};
    }
    ordered_json operator()(const ChordWitness& w) const {
      return {{"type", "chord"},         {"x1", q(w.x1)},      {"x2", q(w.x2)},
              {"t", q(w.t)},             {"f_mid", q(w.f_mid)}, {"chord", q(w.chord)}};
    }
    ordered_json operator()(const LimitWitness& w) const {
      return {{"type", "limit"}, {"x", q(w.x)}, {"limit", q(w.limit)}, {"value", q(w.value)}};
    }
    ordered_json operator()(const BoundsWitness& w) const {
      return {{"type", "bounds"},
              {"inf", q(w.inf)},
              {"inf_attained", w.inf_attained},
              {"sup", q(w.sup)},
              {"sup_attained", w.sup_attained}};
    }
    ordered_json operator()(const AxiomViolation& v) const {
      ordered_json j{{"type", "axiom"}};
      j.update(ordered_json(v));
      return j;
    }
    ordered_json operator()(const Witness& w) const {
      ordered_json j{{"type", "witness"}};
      j.update(ordered_json(w));
      return j;
    }
  };
  return std::visit(Visitor{}, e);
}

Evidence evidence_from(const ordered_json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "point") return point_from(j);
  if (type == "pair") return pair_from(j);
  if (type == "sum") {
    return SumWitness{rat(j.at("a")), rat(j.at("b")), rat(j.at("fa")), rat(j.at("fb")),
                      rat(j.at("fsum"))};
  }
  if (type == "chord") {
    return ChordWitness{rat(j.at("x1")), rat(j.at("x2")), rat(j.at("t")), rat(j.at("f_mid")),
                        rat(j.at("chord"))};
  }
  if (type == "limit") return LimitWitness{rat(j.at("x")), ext(j.at("limit")), rat(j.at("value"))};
  if (type == "bounds") {
    return BoundsWitness{ext(j.at("inf")), j.at("inf_attained").get<bool>(), ext(j.at("sup")),
                         j.at("sup_attained").get<bool>()};
  }
  if (type == "axiom") return j.get<AxiomViolation>();
  if (type == "witness") return j.get<Witness>();
  throw std::invalid_argument("unknown evidence type " + type);
}

ordered_json rationals_json(const std::vector<Rational>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(q(x));
  return a;
}

std::vector<Rational> rationals_from(const ordered_json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rat(x));
  return out;
}

}  // namespace

void to_json(ordered_json& j, const DistanceMatrix& d) {
  j = ordered_json::array();
  for (const auto& row : d.rows()) j.push_back(rationals_json(row));
}

void from_json(const ordered_json& j, DistanceMatrix& d) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) rows.push_back(rationals_from(row));
  d = DistanceMatrix(std::move(rows));
}

void to_json(ordered_json& j, const AxiomViolation& v) {
  j = {{"axiom", to_string(v.axiom)}, {"i", v.i}, {"j", v.j}};
  j["k"] = v.k ? ordered_json(*v.k) : ordered_json(nullptr);
  j["lhs"] = q(v.lhs);
  j["rhs"] = q(v.rhs);
}

void from_json(const ordered_json& j, AxiomViolation& v) {
  v.axiom = parse_axiom(j.at("axiom").get<std::string>());
  v.i = j.at("i").get<size_t>();
  v.j = j.at("j").get<size_t>();
  v.k = j.at("k").is_null() ? std::nullopt : std::optional<size_t>(j.at("k").get<size_t>());
  v.lhs = rat(j.at("lhs"));
  v.rhs = rat(j.at("rhs"));
}

void to_json(ordered_json& j, const Triplet& t) {
  j = {{"a", q(t.a)},
       {"b", q(t.b)},
       {"c", q(t.c)},
       {"in_delta", t.in_delta},
       {"in_delta_inf", t.in_delta_inf},
       {"shape", to_string(t.shape)}};
}

void from_json(const ordered_json& j, Triplet& t) {
  t = make_triplet(rat(j.at("a")), rat(j.at("b")), rat(j.at("c")));
}

void to_json(ordered_json& j, const Witness& w) {
  j = {{"kind", to_string(w.kind)}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PairWitness>) {
          j["pair"] = pair_json(p);
        } else if constexpr (std::is_same_v<T, PointWitness>) {
          j["point"] = point_json(p);
        } else {
          j["triplet"] = ordered_json(p);
        }
      },
      w.payload);
  j["realized"] = ordered_json(w.realized);
  j["failed_axiom"] = ordered_json(w.failed_axiom);
}

void from_json(const ordered_json& j, Witness& w) {
  w.kind = parse_witness_kind(j.at("kind").get<std::string>());
  if (j.contains("pair")) {
    w.payload = pair_from(j.at("pair"));
  } else if (j.contains("point")) {
    w.payload = point_from(j.at("point"));
  } else {
    w.payload = j.at("triplet").get<Triplet>();
  }
  w.realized = j.at("realized").get<DistanceMatrix>();
  w.failed_axiom = j.at("failed_axiom").get<AxiomViolation>();
}

void to_json(ordered_json& j, const Verdict& v) {
  j = {{"status", to_string(v.status)}, {"rule", v.rule}};
  if (v.value) j["value"] = q(*v.value);
  if (v.evidence) j["evidence"] = evidence_json(*v.evidence);
}

void from_json(const ordered_json& j, Verdict& v) {
  v.status = parse_status(j.at("status").get<std::string>());
  v.rule = j.at("rule").get<std::string>();
  v.value = j.contains("value") ? std::optional<ExtRational>(ext(j.at("value"))) : std::nullopt;
  v.evidence = j.contains("evidence") ? std::optional<Evidence>(evidence_from(j.at("evidence")))
                                      : std::nullopt;
}

namespace {

ordered_json continuity_json(const ContinuityProfile& p) {
  ordered_json j{{"at_zero", p.at_zero},
                 {"everywhere", p.everywhere},
                 {"uniformly_continuous", p.uniformly_continuous}};
  j["inf_positive"] = p.inf_positive ? ordered_json(q(*p.inf_positive)) : ordered_json(nullptr);
  j["inf_attained"] = p.inf_attained;
  j["discontinuities"] = rationals_json(p.discontinuities);
  j["consistency_notes"] = p.consistency_notes;
  return j;
}

ContinuityProfile continuity_from(const ordered_json& j) {
  ContinuityProfile p;
  p.at_zero = j.at("at_zero").get<bool>();
  p.everywhere = j.at("everywhere").get<bool>();
  p.uniformly_continuous = j.at("uniformly_continuous").get<bool>();
  if (!j.at("inf_positive").is_null()) p.inf_positive = ext(j.at("inf_positive"));
  p.inf_attained = j.at("inf_attained").get<bool>();
  p.discontinuities = rationals_from(j.at("discontinuities"));
  p.consistency_notes = j.at("consistency_notes").get<std::vector<std::string>>();
  return p;
}

constexpr std::pair<const char*, Verdict PropertyVerdicts::*> kPropertyFields[] = {
    {"amenable", &PropertyVerdicts::amenable},
    {"increasing", &PropertyVerdicts::increasing},
    {"concave", &PropertyVerdicts::concave},
    {"subadditive", &PropertyVerdicts::subadditive},
    {"tightly_bounded", &PropertyVerdicts::tightly_bounded},
    {"constant_on_positive", &PropertyVerdicts::constant_on_positive},
    {"doubling", &PropertyVerdicts::doubling},
};

constexpr std::pair<const char*, Verdict ClassReport::*> kClassFields[] = {
    {"U", &ClassReport::in_U},
    {"MU", &ClassReport::in_MU},
    {"UM", &ClassReport::in_UM},
    {"M", &ClassReport::in_M},
};

}  // namespace

void to_json(ordered_json& j, const ClassReport& r) {
  j = ordered_json::object();
  ordered_json classes = ordered_json::object();
  for (auto [name, field] : kClassFields) classes[name] = ordered_json(r.*field);
  j["classes"] = classes;
  ordered_json props = ordered_json::object();
  for (auto [name, field] : kPropertyFields) props[name] = ordered_json(r.properties.*field);
  j["properties"] = props;
  j["continuity"] = continuity_json(r.continuity);
  j["rules_fired"] = r.rules_fired;
}

void from_json(const ordered_json& j, ClassReport& r) {
  for (auto [name, field] : kClassFields) r.*field = j.at("classes").at(name).get<Verdict>();
  for (auto [name, field] : kPropertyFields) {
    r.properties.*field = j.at("properties").at(name).get<Verdict>();
  }
  r.continuity = continuity_from(j.at("continuity"));
  r.rules_fired = j.at("rules_fired").get<std::vector<std::string>>();
}

void to_json(ordered_json& j, const ReportDocument& d) {
  j = {{"tool", d.tool},
       {"version", d.version},
       {"function_sha256", d.function_sha256},
       {"function", d.function_source}};
  ordered_json r(d.report);
  for (auto& [key, value] : r.items()) j[key] = value;
  j["witnesses"] = ordered_json::array();
  for (const auto& w : d.witnesses) j["witnesses"].push_back(ordered_json(w));
  if (d.timing_ms) j["timing_ms"] = *d.timing_ms;
}

void from_json(const ordered_json& j, ReportDocument& d) {
  d.tool = j.at("tool").get<std::string>();
  d.version = j.at("version").get<std::string>();
  d.function_sha256 = j.at("function_sha256").get<std::string>();
  d.function_source = j.at("function").get<std::string>();
  d.report = j.get<ClassReport>();
  d.witnesses.clear();
  for (const auto& w : j.at("witnesses")) d.witnesses.push_back(w.get<Witness>());
  d.timing_ms = j.contains("timing_ms") ? std::optional<double>(j.at("timing_ms").get<double>())
                                        : std::nullopt;
}

std::string serialize(const ReportDocument& d) { return ordered_json(d).dump(2) + "\n"; }

ReportDocument parse_report(const std::string& json_text) {
  return ordered_json::parse(json_text).get<ReportDocument>();
}

std::string render_witness_text(const Witness& w) {
  std::ostringstream os;
  os << "witness: " << describe(w) << "\n";
  os << "realized space:\n" << to_csv(w.realized);
  return os.str();
}

std::string render_text(const ReportDocument& d) {
  std::ostringstream os;
  os << d.tool << " " << d.version << "\n";
  os << "function sha256 " << d.function_sha256 << "\n" << d.function_source;
  os << "classes:\n";
  for (auto [name, field] : kClassFields) {
    const Verdict& v = d.report.*field;
    os << "  " << name << ": " << to_string(v.status) << " (" << v.rule << ")";
    if (v.value) os << " c = " << to_string(*v.value);
    os << "\n";
    if (v.evidence) os << "    " << describe(*v.evidence) << "\n";
  }
  os << "properties:\n";
  for (auto [name, field] : kPropertyFields) {
    const Verdict& v = d.report.properties.*field;
    os << "  " << name << ": " << to_string(v.status);
    if (v.value) os << " [" << to_string(*v.value) << "]";
    if (v.evidence) os << " - " << describe(*v.evidence);
    os << "\n";
  }
  const auto& c = d.report.continuity;
  os << "continuity: at 0 " << (c.at_zero ? "yes" : "no") << ", everywhere "
     << (c.everywhere ? "yes" : "no") << ", uniformly " << (c.uniformly_continuous ? "yes" : "no")
     << ", inf over (0, inf) "
     << (c.inf_positive ? to_string(*c.inf_positive) : std::string("unresolved")) << "\n";
  for (const auto& note : c.consistency_notes) os << "  inconsistency: " << note << "\n";
  if (d.timing_ms) os << "time: " << *d.timing_ms << " ms\n";
  return os.str();
}

}  // namespace umpf
