// cmint: command-line front end.
//
//   cmint intersect --field '{"D":5,"alpha":[0,1],"beta":[1,1]}' --ell 2 [--trace]
//   cmint primes    --field field.json
//   cmint special   --field field.json --ell 2
//   cmint selftest
//
// Exit status: 0 ok, 2 input error, 3 hypothesis violation, 4 internal failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cmint/cmint.hpp"
#include "cmint/report.hpp"
#include "cmint/selftest.hpp"

namespace {

using cmint::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string field;
  std::string batch;
  std::string ell;
  std::string format = "json";
  std::string index_bound;
  bool trace = false;
};

int exit_code(cmint::ErrorCategory c) {
  switch (c) {
    case cmint::ErrorCategory::Input: return kExitInput;
    case cmint::ErrorCategory::Hypothesis: return kExitHypothesis;
    case cmint::ErrorCategory::Internal: return kExitInternal;
  }
  return kExitInternal;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cmint::Error(cmint::Errc::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON if it looks like an object, otherwise a path.
Json load_field_doc(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return cmint::io::parse_json_text(arg);
  return cmint::io::parse_json_text(read_file(arg));
}

// A batch file is a JSON array of field records, or one record per line.
std::vector<Json> load_batch(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    std::vector<Json> out;
    for (const auto& r : cmint::io::parse_json_text(text)) out.push_back(r);
    return out;
  }
  std::vector<Json> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cmint::io::parse_json_text(line));
  return out;
}

cmint::Integer parse_integer(const std::string& s, const char* what) {
  cmint::Integer n;
  if (s.empty() || n.set_str(s, 10) != 0)
    throw cmint::Error(cmint::Errc::InvalidArgument, std::string(what) + " is not an integer: '" + s + "'");
  return n;
}

cmint::Integer require_ell(const Options& o) {
  if (o.ell.empty()) throw cmint::Error(cmint::Errc::InvalidArgument, "--ell is required");
  const cmint::Integer ell = parse_integer(o.ell, "--ell");
  if (!cmint::is_prime(ell)) throw cmint::Error(cmint::Errc::InvalidArgument, "--ell must be prime");
  return ell;
}

cmint::CMFieldData field_from(const Json& doc, const Options& o) {
  cmint::CMFieldParams params = cmint::io::field_from_json(doc);
  if (!o.index_bound.empty()) params.index_bound = parse_integer(o.index_bound, "--index-bound");
  return cmint::validate(params);
}

// Runs one verb on one field, returning the rendered output.
std::string run_one(const std::string& verb, const Json& doc, const Options& o, bool compact) {
  const cmint::CMFieldData field = field_from(doc, o);
  const bool table = o.format == "table";
  Json out;
  out["field"] = cmint::io::field_to_json(field.params);
  if (verb == "intersect") {
    const auto rep = cmint::intersection_number(field, require_ell(o));
    if (table) return cmint::io::report_to_table(rep, o.trace);
    const Json body = cmint::io::report_to_json(rep, o.trace);
    for (const auto& [k, v] : body.items()) out[k] = v;
  } else if (verb == "primes") {
    const auto cands = cmint::enumerate_candidate_primes(field);
    if (table) return cmint::io::candidates_to_table(cands);
    out["candidates"] = cmint::io::candidates_to_json(cands);
  } else {  // special
    const cmint::Integer ell = require_ell(o);
    const auto value = cmint::special_case_value(field, ell);
    if (table) return "ell    " + ell.get_str() + "\nvalue  " + (value ? value->get_str() : "hypotheses-not-met") + "\n";
    out["ell"] = cmint::io::to_json(ell);
    out["value"] = value ? cmint::io::to_json(*value) : Json("hypotheses-not-met");
  }
  return (compact ? out.dump() : out.dump(2)) + "\n";
}

int run_verb(const std::string& verb, const Options& o) {
  if (o.format != "json" && o.format != "table") {
    std::cerr << "error: --format must be json or table\n";
    return kExitInput;
  }
  if (o.field.empty() == o.batch.empty()) {
    std::cerr << "error: give exactly one of --field or --batch\n";
    return kExitInput;
  }
  if (o.batch.empty()) {
    try {
      std::cout << run_one(verb, load_field_doc(o.field), o, false);
      return kExitOk;
    } catch (const cmint::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code(e.category());
    }
  }
  // Batch: one line per record in input order; failures are reported inline.
  int status = kExitOk;
  std::vector<Json> records;
  try {
    records = load_batch(o.batch);
  } catch (const cmint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.category());
  }
  for (const auto& rec : records) {
    try {
      std::cout << run_one(verb, rec, o, true);
    } catch (const cmint::Error& e) {
      Json err;
      err["record"] = rec;
      err["error"] = std::string(cmint::to_string(e.code()));
      err["message"] = e.what();
      std::cout << err.dump() << "\n";
      status = std::max(status, exit_code(e.category()));
    }
  }
  return status;
}

int run_selftest() {
  long failed = 0;
  for (const auto& s : cmint::run_selftest()) {
    std::cout << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.passed << " passed, " << s.failed
              << " failed\n";
    failed += s.failed;
  }
  return failed == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic intersection numbers (CM(K).G_1) for primitive quartic CM fields"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_ell) {
    sub->add_option("--field", o.field, "field spec: JSON file path or inline JSON object");
    sub->add_option("--batch", o.batch, "file of field records (JSON array or one object per line)");
    sub->add_option("--format", o.format, "json or table")->capture_default_str();
    sub->add_option("--index-bound", o.index_bound, "asserted index [O_K : O_F[eta]]");
    if (needs_ell) sub->add_option("--ell", o.ell, "prime ell");
  };
  auto* intersect = app.add_subcommand("intersect", "coefficient of log(ell) in (CM(K).G_1)");
  add_common(intersect, true);
  intersect->add_flag("--trace", o.trace, "include every contribution row");
  auto* primes = app.add_subcommand("primes", "candidate primes with witnesses (delta, n)");
  add_common(primes, false);
  auto* special = app.add_subcommand("special", "fundamental-discriminant special-case value");
  add_common(special, true);
  auto* selftest = app.add_subcommand("selftest", "run the oracle cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (selftest->parsed()) return run_selftest();
    if (intersect->parsed()) return run_verb("intersect", o);
    if (primes->parsed()) return run_verb("primes", o);
    if (special->parsed()) return run_verb("special", o);
  } catch (const cmint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
