#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "hodgeinf/curve.hpp"
#include "hodgeinf/errors.hpp"
#include "hodgeinf/local_models.hpp"
#include "hodgeinf/mhs_infinity.hpp"

namespace hodgeinf {

using Json = nlohmann::ordered_json;
using AnalysisInput = std::variant<StarPolynomialSpec, CurveSpec>;

namespace io {

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key + ": missing");
  return *it;
}

inline std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<std::int64_t>();
}

/// Rationals are strings "a/b" or "a"; plain integers are accepted too.
inline Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(path + ": expected a rational string \"a/b\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  return j;
}

inline std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline LocalModel parse_model(const Json& j, const std::string& path) {
  const Json& kind = field(j, "model", path);
  if (!kind.is_string()) throw ParseError(path + ".model: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "brieskorn-pham") {
    BrieskornPham m;
    const std::string p = path + ".exponents";
    const Json& arr = as_array(field(j, "exponents", path), p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto e = as_int(arr[i], index_path(p, i));
      if (e < 2) throw ValidationError(index_path(p, i) + ": exponent must be >= 2");
      m.exponents.push_back(static_cast<int>(e));
    }
    if (m.exponents.empty()) throw ValidationError(p + ": at least one exponent is required");
    return m;
  }
  if (k == "quasihomogeneous") {
    Quasihomogeneous m;
    const std::string p = path + ".weights";
    const Json& arr = as_array(field(j, "weights", path), p);
    for (std::size_t i = 0; i < arr.size(); ++i) m.weights.push_back(as_rational(arr[i], index_path(p, i)));
    return m;
  }
  if (k == "spectral-pairs") {
    ExplicitSpp m;
    m.variables = static_cast<int>(as_int(field(j, "variables", path), path + ".variables"));
    const std::string p = path + ".pairs";
    const Json& arr = as_array(field(j, "pairs", path), p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string pi = index_path(p, i);
      const Json& e = as_array(arr[i], pi);
      if (e.size() != 2 && e.size() != 3) throw ParseError(pi + ": expected [alpha, omega] or [alpha, omega, mult]");
      const Rational alpha = as_rational(e[0], pi + "[0]");
      const auto omega = as_int(e[1], pi + "[1]");
      const auto mult = e.size() == 3 ? as_int(e[2], pi + "[2]") : 1;
      if (omega < 0) throw ValidationError(pi + "[1]: weight must be >= 0");
      if (mult < 0) throw ValidationError(pi + "[2]: multiplicity must be >= 0");
      m.pairs.add({alpha, omega}, mult);
    }
    return m;
  }
  if (k == "join")
    return LocalModel::join(parse_model(field(j, "left", path), path + ".left"),
                            parse_model(field(j, "right", path), path + ".right"));
  throw ParseError(path + ".model: unknown model \"" + k + "\"");
}

inline std::map<int, std::int64_t> parse_pure_row(const Json& j, const std::string& path) {
  std::map<int, std::int64_t> row;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string pi = index_path(path, i);
    const Json& e = as_array(arr[i], pi);
    if (e.size() != 2) throw ParseError(pi + ": expected [p, mult]");
    const auto p = as_int(e[0], pi + "[0]");
    const auto m = as_int(e[1], pi + "[1]");
    if (m < 0) throw ValidationError(pi + "[1]: multiplicity must be >= 0");
    row[static_cast<int>(p)] += m;
  }
  return row;
}

inline GlobalPositionData parse_global(const Json& j, const std::string& path) {
  GlobalPositionData g;
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  if (auto it = j.find("pn_xinf"); it != j.end()) g.pn_xinf = parse_pure_row(*it, path + ".pn_xinf");
  if (auto it = j.find("pn1_cover"); it != j.end()) {
    if (!it->is_object()) throw ParseError(path + ".pn1_cover: expected an object keyed by sector");
    for (const auto& [key, row] : it->items()) {
      const std::string p = path + ".pn1_cover." + key;
      int s = 0;
      try {
        std::size_t used = 0;
        s = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError(p + ": sector key must be an integer");
      }
      g.pn1_cover[s] = parse_pure_row(row, p);
    }
  }
  return g;
}

}  // namespace io

/// Parses and validates an input document.
inline AnalysisInput parse_spec(const Json& doc) {
  if (!doc.is_object()) throw ParseError("$: expected an object");
  if (doc.contains("multiplicities")) {
    CurveSpec c;
    const Json& arr = io::as_array(doc["multiplicities"], "$.multiplicities");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto a = io::as_int(arr[i], io::index_path("$.multiplicities", i));
      if (a < 1) throw ValidationError(io::index_path("$.multiplicities", i) + ": must be >= 1");
      c.multiplicities.push_back(a);
    }
    if (doc.contains("n") && io::as_int(doc["n"], "$.n") != 1)
      throw ValidationError("$.n: the multiplicities form describes plane curves, n must be 1");
    if (doc.contains("d") && io::as_int(doc["d"], "$.d") != c.d())
      throw ValidationError("$.d: does not match the sum of multiplicities");
    c.validate();
    return c;
  }
  StarPolynomialSpec spec;
  spec.n = static_cast<int>(io::as_int(io::field(doc, "n", "$"), "$.n"));
  spec.d = static_cast<int>(io::as_int(io::field(doc, "d", "$"), "$.d"));
  if (auto it = doc.find("singularities"); it != doc.end()) {
    const Json& arr = io::as_array(*it, "$.singularities");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = io::index_path("$.singularities", i);
      LocalModel model = io::parse_model(arr[i], p);
      std::int64_t count = 1;
      if (arr[i].contains("count")) {
        count = io::as_int(arr[i]["count"], p + ".count");
        if (count < 1) throw ValidationError(p + ".count: must be >= 1");
      }
      for (std::int64_t c = 0; c < count; ++c) spec.locals.push_back(model);
    }
  }
  if (auto it = doc.find("global"); it != doc.end()) spec.global = io::parse_global(*it, "$.global");
  try {
    spec.validate();
    for (std::size_t j = 0; j < spec.locals.size(); ++j) (void)local_spectral_pairs(spec.locals[j]);
  } catch (const ValidationError&) {
    throw;
  } catch (const NonIsolated& e) {
    throw ValidationError(std::string("$.singularities: ") + e.what());
  } catch (const DegreeTooSmall& e) {
    throw ValidationError(std::string("$.d: ") + e.what());
  }
  return spec;
}

inline AnalysisInput parse_spec_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(doc);
}

inline AnalysisInput load_spec(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

}  // namespace hodgeinf
