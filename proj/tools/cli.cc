#include "cli.h"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "umpf/classifier.h"
#include "umpf/dsl.h"
#include "umpf/errors.h"
#include "umpf/finspace.h"
#include "umpf/report.h"
#include "umpf/search.h"

namespace umpf::cli {

using nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PiecewiseFunction load_fn(const std::string& path, std::string* source = nullptr) {
  std::string text = read_file(path);
  if (source) *source = text;
  try {
    return parse_function(text);
  } catch (const FunctionError& e) {
    throw InputError(path + ": " + e.what());
  }
}

DistanceMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_matrix_csv(text);
  } catch (const MatrixFormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Options {
  std::string format = "json";
  std::string fn_file;
  std::string matrix_file;
  std::string out_file;
  std::string cls;
  bool ultra = false;
  bool timing = false;
  size_t budget = SearchBudget{}.evaluations;
  std::uint64_t seed = 1;
  size_t spaces = 200;
};

bool json(const Options& o) { return o.format == "json"; }

int cmd_classify(const Options& o, std::ostream& out) {
  std::string source;
  PiecewiseFunction f = load_fn(o.fn_file, &source);
  auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.function_sha256 = sha256_hex(source);
  doc.function_source = f.to_dsl();
  doc.report = classify_all(f, {o.budget, o.seed});
  for (const Verdict* v : {&doc.report.in_U, &doc.report.in_MU, &doc.report.in_UM,
                           &doc.report.in_M}) {
    if (const Witness* w = v->witness()) doc.witnesses.push_back(*w);
  }
  if (o.timing) {
    doc.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  out << (json(o) ? serialize(doc) : render_text(doc));
  return kOk;
}

int cmd_check_matrix(const Options& o, std::ostream& out) {
  DistanceMatrix d = load_matrix(o.matrix_file);
  Verdict v = o.ultra ? validate_ultrametric(d) : validate_metric(d);
  const char* axioms = o.ultra ? "ultrametric" : "metric";
  if (json(o)) {
    ordered_json j{{"points", d.size()}, {"axioms", axioms}, {"status", to_string(v.status)}};
    if (v.is_refuted()) j["violation"] = ordered_json(std::get<AxiomViolation>(*v.evidence));
    out << j.dump(2) << "\n";
  } else if (v.is_proven()) {
    out << d.size() << " points satisfy the " << axioms << " axioms\n";
  } else {
    out << "violation: " << describe(*v.evidence) << "\n";
  }
  return v.is_proven() ? kOk : kViolation;
}

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  PiecewiseFunction f = load_fn(o.fn_file);
  DistanceMatrix d = load_matrix(o.matrix_file);
  DistanceMatrix image;
  try {
    image = transform_space(d, f);
  } catch (const NonAmenableDiagonal& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) throw InputError("cannot write " + o.out_file);
  file << to_csv(image);
  file.close();
  if (!file) throw InputError("cannot write " + o.out_file);
  bool metric = validate_metric(image).is_proven();
  bool ultra = validate_ultrametric(image).is_proven();
  if (json(o)) {
    ordered_json j{{"out", o.out_file}, {"metric", metric}, {"ultrametric", ultra}};
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << o.out_file << "; metric: " << (metric ? "yes" : "no")
        << ", ultrametric: " << (ultra ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  PiecewiseFunction f = load_fn(o.fn_file);
  ClassReport r = classify_all(f, {o.budget, o.seed});
  const Verdict& v = o.cls == "U" ? r.in_U : o.cls == "M" ? r.in_M : o.cls == "MU" ? r.in_MU
                                                                                    : r.in_UM;
  const Witness* w = v.witness();
  if (json(o)) {
    ordered_json j{{"class", o.cls}, {"status", to_string(v.status)}, {"rule", v.rule}};
    if (w) {
      j["witness"] = ordered_json(*w);
    } else {
      j["result"] = v.is_proven() ? "member (proven)" : "no witness found (unknown)";
    }
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "not in " << o.cls << " (" << v.rule << ")\n" << render_witness_text(*w);
  } else {
    out << (v.is_proven() ? "member (proven): " : "no witness found (unknown): ") << v.rule
        << "\n";
  }
  return w ? kViolation : kOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  PiecewiseFunction f = load_fn(o.fn_file);
  ClassReport r = classify_all(f, {o.budget, o.seed});
  CrossValidation cv = cross_validate(f, r, o.spaces, o.seed);
  if (json(o)) {
    ordered_json j{{"spaces", cv.checked},
                   {"image_metric", cv.image_metric},
                   {"image_ultrametric", cv.image_ultrametric},
                   {"image_two_valued", cv.image_two_valued}};
    ordered_json dis = ordered_json::array();
    for (const auto& d : cv.disagreements) {
      dis.push_back({{"claim", d.claim},
                     {"space", d.space},
                     {"n", d.n},
                     {"seed", d.seed},
                     {"matrix", ordered_json(d.matrix)},
                     {"failure", d.failure}});
    }
    j["disagreements"] = dis;
    out << j.dump(2) << "\n";
  } else {
    out << "spaces checked: " << cv.checked << "\n"
        << "images satisfying metric axioms: " << cv.image_metric << "\n"
        << "images satisfying ultrametric axioms: " << cv.image_ultrametric << "\n"
        << "two-valued images: " << cv.image_two_valued << "\n";
    for (const auto& d : cv.disagreements) {
      out << "disagreement: " << d.claim << " on " << d.space << " space (n = " << d.n
          << ", seed " << d.seed << "): " << d.failure << "\n"
          << to_csv(d.matrix);
    }
  }
  return cv.disagreements.empty() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide metric- and ultrametric-preserving properties of piecewise functions",
               "umpf"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify a function into U, M, MU, UM");
  classify->add_option("fn", o.fn_file, "Function file")->required();
  classify->add_option("--budget", o.budget, "Search evaluations")->capture_default_str();
  classify->add_option("--seed", o.seed, "Search seed")->capture_default_str();
  classify->add_flag("--timing", o.timing, "Include wall-clock timing");

  auto* check = app.add_subcommand("check-matrix", "Check a distance matrix");
  check->add_option("csv", o.matrix_file, "Matrix CSV")->required();
  check->add_flag("--ultra", o.ultra, "Check the ultrametric inequality");

  auto* transform = app.add_subcommand("transform", "Apply f entrywise to a matrix");
  transform->add_option("fn", o.fn_file, "Function file")->required();
  transform->add_option("csv", o.matrix_file, "Matrix CSV")->required();
  transform->add_option("--out", o.out_file, "Output CSV")->required();

  auto* witness = app.add_subcommand("witness", "Find a non-membership witness");
  witness->add_option("fn", o.fn_file, "Function file")->required();
  witness->add_option("--class", o.cls, "Class")
      ->required()
      ->check(CLI::IsMember({"M", "U", "MU", "UM"}));
  witness->add_option("--seed", o.seed, "Search seed")->capture_default_str();
  witness->add_option("--budget", o.budget, "Search evaluations")->capture_default_str();

  auto* fuzz = app.add_subcommand("fuzz", "Cross-check verdicts on random spaces");
  fuzz->add_option("fn", o.fn_file, "Function file")->required();
  fuzz->add_option("--spaces", o.spaces, "Number of spaces")
      ->required()
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

  // Allow the global option after the subcommand as well.
  for (auto* sub : {classify, check, transform, witness, fuzz}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*check) return cmd_check_matrix(o, out);
    if (*transform) return cmd_transform(o, out, err);
    if (*witness) return cmd_witness(o, out);
    if (*fuzz) return cmd_fuzz(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace umpf::cli
