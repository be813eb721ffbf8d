#pragma once

// JSON and table serialization of reports, and field-spec parsing.
// Integers go out as JSON numbers when they fit in int64, as decimal strings
// otherwise; rationals are [num, den] pairs.

#include <json.hpp>

#include <sstream>
#include <string>

#include "cmint/arith.hpp"
#include "cmint/cm_field.hpp"
#include "cmint/intersection.hpp"

namespace cmint::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<long long>(n.get_si()));
  return Json(n.get_str());
}

inline Json to_json(const Rational& q) { return Json::array({to_json(q.get_num()), to_json(q.get_den())}); }

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw Error(Errc::InvalidArgument, "not an integer: " + j.dump());
    return n;
  }
  throw Error(Errc::InvalidArgument, "expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidArgument, "expected [num, den], got " + j.dump());
  const Integer den = integer_from_json(j[1]);
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational q(integer_from_json(j[0]), den);
  q.canonicalize();
  return q;
}

inline Exactness exactness_from_string(const std::string& s) {
  if (s == "Exact") return Exactness::Exact;
  if (s == "UpperBound") return Exactness::UpperBound;
  throw Error(Errc::InvalidArgument, "unknown exactness: " + s);
}

inline Mode mode_from_string(const std::string& s) {
  if (s == "Monogenic") return Mode::Monogenic;
  if (s == "IndexBound") return Mode::IndexBound;
  throw Error(Errc::InvalidArgument, "unknown mode: " + s);
}

// ---- field specs ----

/// {"D": 5, "alpha": [0, 1], "beta": [1, 1], "index_bound": 1}; index_bound optional.
inline CMFieldParams field_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidArgument, "field spec must be a JSON object");
  for (const char* key : {"D", "alpha", "beta"})
    if (!j.contains(key)) throw Error(Errc::InvalidArgument, std::string("field spec is missing \"") + key + "\"");
  auto pair = [&](const char* key) {
    const Json& v = j.at(key);
    if (!v.is_array() || v.size() != 2)
      throw Error(Errc::InvalidArgument, std::string("\"") + key + "\" must be a pair of integers");
    return std::make_pair(integer_from_json(v[0]), integer_from_json(v[1]));
  };
  CMFieldParams f;
  f.D = integer_from_json(j.at("D"));
  std::tie(f.alpha0, f.alpha1) = pair("alpha");
  std::tie(f.beta0, f.beta1) = pair("beta");
  if (j.contains("index_bound")) f.index_bound = integer_from_json(j.at("index_bound"));
  return f;
}

inline Json field_to_json(const CMFieldParams& f) {
  Json j;
  j["D"] = to_json(f.D);
  j["alpha"] = Json::array({to_json(f.alpha0), to_json(f.alpha1)});
  j["beta"] = Json::array({to_json(f.beta0), to_json(f.beta1)});
  j["index_bound"] = to_json(f.index_bound);
  return j;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

// ---- intersection reports ----

inline Json row_to_json(const ContributionRow& r) {
  Json j;
  j["delta"] = to_json(r.delta);
  j["n"] = to_json(r.n);
  j["f_u"] = to_json(r.fu);
  j["C_delta"] = r.C_delta;
  j["mu"] = to_json(r.mu);
  j["frakI"] = to_json(r.frakI);
  j["scrJ"] = to_json(r.scrJ_value);
  j["scrJ_exactness"] = std::string(to_string(r.scrJ_exactness));
  j["product"] = to_json(r.product);
  return j;
}

inline ContributionRow row_from_json(const Json& j) {
  ContributionRow r;
  r.delta = integer_from_json(j.at("delta"));
  r.n = integer_from_json(j.at("n"));
  r.fu = integer_from_json(j.at("f_u"));
  r.C_delta = j.at("C_delta").get<int>();
  r.mu = rational_from_json(j.at("mu"));
  r.frakI = integer_from_json(j.at("frakI"));
  r.scrJ_value = integer_from_json(j.at("scrJ"));
  r.scrJ_exactness = exactness_from_string(j.at("scrJ_exactness").get<std::string>());
  r.product = rational_from_json(j.at("product"));
  return r;
}

inline Json report_to_json(const IntersectionReport& rep, bool with_rows = true) {
  Json j;
  j["value"] = to_json(rep.value);
  j["exactness"] = std::string(to_string(rep.exactness));
  j["mode"] = std::string(to_string(rep.mode));
  j["ell"] = to_json(rep.ell);
  j["doubled"] = rep.doubled;
  Json rows = Json::array();
  if (with_rows)
    for (const auto& r : rep.rows) rows.push_back(row_to_json(r));
  j["rows"] = rows;
  j["warnings"] = rep.warnings;
  return j;
}

inline IntersectionReport report_from_json(const Json& j) {
  IntersectionReport rep;
  rep.value = rational_from_json(j.at("value"));
  rep.exactness = exactness_from_string(j.at("exactness").get<std::string>());
  rep.mode = mode_from_string(j.at("mode").get<std::string>());
  rep.ell = integer_from_json(j.at("ell"));
  rep.doubled = j.value("doubled", false);
  for (const auto& r : j.at("rows")) rep.rows.push_back(row_from_json(r));
  for (const auto& w : j.at("warnings")) rep.warnings.push_back(w.get<std::string>());
  return rep;
}

inline Json candidates_to_json(const std::vector<CandidatePrime>& cands) {
  Json arr = Json::array();
  for (const auto& c : cands) {
    Json w = Json::array();
    for (const auto& [delta, n] : c.witnesses) w.push_back(Json::array({to_json(delta), to_json(n)}));
    Json e;
    e["ell"] = to_json(c.ell);
    e["witnesses"] = w;
    arr.push_back(e);
  }
  return arr;
}

// ---- tables ----

inline std::string report_to_table(const IntersectionReport& rep, bool with_rows) {
  std::ostringstream os;
  os << "ell        " << rep.ell.get_str() << "\n";
  os << "value      " << rep.value.get_str() << " * log(ell)\n";
  os << "exactness  " << to_string(rep.exactness) << "\n";
  os << "mode       " << to_string(rep.mode) << (rep.doubled ? "  (factor 2 applied)" : "") << "\n";
  if (with_rows) {
    os << "rows       " << rep.rows.size() << "\n";
    os << "  delta  n  f_u  C  mu  frakI  scrJ  product\n";
    for (const auto& r : rep.rows)
      os << "  " << r.delta.get_str() << "  " << r.n.get_str() << "  " << r.fu.get_str() << "  " << r.C_delta << "  "
         << r.mu.get_str() << "  " << r.frakI.get_str() << "  " << r.scrJ_value.get_str()
         << (r.scrJ_exactness == Exactness::Exact ? "" : "(bound)") << "  " << r.product.get_str() << "\n";
  }
  for (const auto& w : rep.warnings) os << "warning    " << w << "\n";
  return os.str();
}

inline std::string candidates_to_table(const std::vector<CandidatePrime>& cands) {
  std::ostringstream os;
  if (cands.empty()) os << "(no candidate primes)\n";
  for (const auto& c : cands) {
    os << c.ell.get_str() << ":";
    for (const auto& [delta, n] : c.witnesses) os << " (" << delta.get_str() << ", " << n.get_str() << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace cmint::io
