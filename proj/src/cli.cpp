#include "mono/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mono/expr.hpp"

namespace mono {

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  return j;
}

PipelineOptions options_of(const RunConfig& c) {
  PipelineOptions o;
  o.precision = static_cast<mpfr_prec_t>(c.precision_bits);
  o.max_cosets = c.max_cosets;
  o.seed = c.seed;
  return o;
}

FamilySpec family_of(const Json& j) {
  if (!j.contains("p") || !j.contains("q"))
    throw ParseError("family file requires \"p\" and \"q\" expressions");
  FamilySpec fam;
  fam.p = parse_rational_function(j.at("p").get<std::string>());
  fam.q = parse_rational_function(j.at("q").get<std::string>());
  fam.label = j.value("label", std::string("unnamed"));
  return fam;
}

Json run_analyze(const Json& in, const RunConfig& c) {
  auto rep = monodromy_group(family_of(in), options_of(c));
  return to_json(rep);
}

Json run_twist(const Json& in, const RunConfig& c) {
  if (!in.contains("twist_d")) throw ParseError("twist command requires \"twist_d\"");
  TwistSpec tw{parse_rational_function(in.at("twist_d").get<std::string>())};
  auto rep = verify_twist_relation(family_of(in), tw, options_of(c));
  return to_json(rep);
}

Json run_kodaira(const Json& in, const RunConfig&) {
  FamilySpec fam = family_of(in);
  auto sb = surface_bound(fam.p, fam.q);
  Json j = to_json(sb);
  j["label"] = fam.label;
  return j;
}

Json run_hyperell(const Json& in, const RunConfig& c) {
  HyperellFamilySpec fam;
  if (in.contains("f")) {
    fam.f = parse_expression(in.at("f").get<std::string>(), ExprVars{"x", "t"});
    int d = fam.f.deg_x();
    fam.genus = in.value("genus", (d - 1) / 2);
  } else if (in.contains("universal_slice_genus")) {
    fam = universal_slice(in.at("universal_slice_genus").get<int>(), c.seed);
  } else {
    throw ParseError("hyperell command requires \"f\" or \"universal_slice_genus\"");
  }
  fam.label = in.value("label", fam.label.empty() ? std::string("unnamed") : fam.label);
  auto rep = mod2_monodromy(fam, options_of(c));
  return to_json(rep);
}

Json run_quartic(const Json& in, const RunConfig& c) {
  if (!in.contains("quartic")) throw ParseError("quartic command requires \"quartic\"");
  QuarticPencil pen;
  pen.quartic = parse_expression(in.at("quartic").get<std::string>(), ExprVars{"x", "y"});
  pen.x0 = Rational(1, 3);
  pen.y0 = Rational(1, 5);
  if (in.contains("pencil")) {
    auto arr = in.at("pencil");
    if (!arr.is_array() || arr.size() != 2) throw ParseError("\"pencil\" must be [x0, y0]");
    pen.x0 = Rational::parse(arr[0].get<std::string>());
    pen.y0 = Rational::parse(arr[1].get<std::string>());
  }
  auto rep = quartic_pencil_family(pen, options_of(c));
  return to_json(rep);
}

struct SelftestCase {
  std::string file;
  bool passed;
  std::string detail;
};

Json run_selftest(const RunConfig& c) {
  namespace fs = std::filesystem;
  std::string dir = c.corpus_dir.empty() ? "tests/corpus" : c.corpus_dir;
  if (!fs::is_directory(dir)) throw ParseError("selftest corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SelftestCase> cases;
  for (const auto& f : files) {
    Json in = load_json(f.string());
    SelftestCase tc{f.filename().string(), true, ""};
    try {
      std::string cmd = in.value("command", std::string("analyze"));
      RunConfig cc = c;
      if (in.contains("seed")) cc.seed = in.at("seed").get<uint64_t>();
      Json rep;
      if (cmd == "analyze") rep = run_analyze(in, cc);
      else if (cmd == "twist") rep = run_twist(in, cc);
      else if (cmd == "kodaira") rep = run_kodaira(in, cc);
      else if (cmd == "hyperell") rep = run_hyperell(in, cc);
      else if (cmd == "quartic") rep = run_quartic(in, cc);
      else throw ParseError("unknown corpus command: " + cmd);
      if (in.contains("expect")) {
        for (auto& [key, want] : in.at("expect").items()) {
          Json got = rep.at(Json::json_pointer("/" + key));
          if (got != want) {
            tc.passed = false;
            tc.detail += key + ": expected " + want.dump() + ", got " + got.dump() + "; ";
          }
        }
      }
    } catch (const std::exception& e) {
      tc.passed = false;
      tc.detail = e.what();
    }
    if (!c.quiet)
      std::cerr << (tc.passed ? "[PASS] " : "[FAIL] ") << tc.file
                << (tc.detail.empty() ? "" : "  " + tc.detail) << "\n";
    cases.push_back(std::move(tc));
  }
  Json out;
  Json rows = Json::array();
  long failures = 0;
  for (const auto& tc : cases) {
    Json row;
    row["file"] = tc.file;
    row["passed"] = tc.passed;
    if (!tc.detail.empty()) row["detail"] = tc.detail;
    rows.push_back(row);
    if (!tc.passed) ++failures;
  }
  out["cases"] = rows;
  out["total"] = static_cast<long>(cases.size());
  out["failures"] = failures;
  return out;
}

}  // namespace

Json analyze_file(const RunConfig& c) {
  if (c.command == "selftest") return run_selftest(c);
  Json in = load_json(c.input_path);
  if (c.command == "analyze") return run_analyze(in, c);
  if (c.command == "twist") return run_twist(in, c);
  if (c.command == "kodaira") return run_kodaira(in, c);
  if (c.command == "hyperell") return run_hyperell(in, c);
  if (c.command == "quartic") return run_quartic(in, c);
  throw ParseError("unknown command: " + c.command);
}

int run(const RunConfig& c, Json* out) {
  Json doc;
  int code = kOk;
  if (c.precision_bits < 53) {
    doc["error"] = "config";
    doc["message"] = "precision must be at least 53 bits";
    code = kParseError;
  } else if (c.max_cosets < 1) {
    doc["error"] = "config";
    doc["message"] = "max_cosets must be at least 1";
    code = kParseError;
  } else {
    try {
      doc = analyze_file(c);
      if (c.command == "selftest" && doc.value("failures", 0L) != 0) code = kFailure;
    } catch (const ParseError& e) {
      doc = Json{{"error", "parse"}, {"message", e.what()}};
      code = kParseError;
    } catch (const IsotrivialFamily& e) {
      doc = Json{{"error", "isotrivial_family"}, {"message", e.what()}};
      code = kIsotrivial;
    } catch (const BudgetExceeded& e) {
      doc = Json{{"error", "budget_exceeded"}, {"message", e.what()}};
      code = kBudgetExceeded;
    } catch (const PrecisionExhausted& e) {
      doc = Json{{"error", "precision_exhausted"}, {"message", e.what()}};
      code = kPrecisionExhausted;
    } catch (const InternalError& e) {
      doc = Json{{"error", "internal"}, {"message", e.what()}};
      code = kInternal;
    } catch (const Error& e) {
      doc = Json{{"error", "error"}, {"message", e.what()}};
      code = kFailure;
    }
  }
  doc["config"] = config_json(options_of(c));
  doc["config"]["command"] = c.command;
  doc["config"]["input"] = c.input_path;
  if (out) *out = doc;
  if (!c.output_path.empty()) {
    std::ofstream f(c.output_path);
    f << doc.dump(2) << "\n";
  } else if (!c.quiet) {
    std::cout << doc.dump(2) << "\n";
  }
  return code;
}

}  // namespace mono
