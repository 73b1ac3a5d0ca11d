#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hodgeinf/curve.hpp"
#include "hodgeinf/mhs_infinity.hpp"
#include "hodgeinf/seifert.hpp"
#include "hodgeinf/spec_io.hpp"
#include "hodgeinf/spectra.hpp"

namespace hodgeinf {

/// Everything `analyze` reports about one input.
struct ReportDocument {
  std::string kind;  // "star-polynomial" or "curve"
  int n = 0;
  int d = 0;
  std::int64_t rank = 0;
  HodgeTable primitive;
  HodgeTable full;
  JordanStructure jordan;
  SppSet spp;
  std::map<Rational, std::int64_t> spectrum;
  SeifertDecomposition seifert;
  std::map<RootLabel, std::int64_t> signatures;
  SymmetryReport symmetry;
  bool conjugation = false;

  friend bool operator==(const ReportDocument& a, const ReportDocument& b) {
    return a.kind == b.kind && a.n == b.n && a.d == b.d && a.rank == b.rank && a.primitive == b.primitive &&
           a.full == b.full && a.jordan == b.jordan && a.spp == b.spp && a.spectrum == b.spectrum &&
           a.seifert == b.seifert && a.signatures == b.signatures && a.symmetry.sym1 == b.symmetry.sym1 &&
           a.symmetry.sym2 == b.symmetry.sym2 && a.symmetry.spectrum_symmetric == b.symmetry.spectrum_symmetric &&
           a.conjugation == b.conjugation;
  }
};

inline int degree_of(const AnalysisInput& in) {
  return std::visit([](const auto& s) -> int {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CurveSpec>)
      return static_cast<int>(s.d());
    else
      return s.d;
  }, in);
}

inline int dimension_of(const AnalysisInput& in) {
  return std::holds_alternative<CurveSpec>(in) ? 1 : std::get<StarPolynomialSpec>(in).n;
}

inline InfinityHodge compute_infinity(const AnalysisInput& in) {
  if (const auto* c = std::get_if<CurveSpec>(&in)) return infinity_hodge_from_primitive(curve_primitives(*c), 1);
  return infinity_hodge(std::get<StarPolynomialSpec>(in));
}

inline ReportDocument analyze(const AnalysisInput& in) {
  const InfinityHodge h = compute_infinity(in);
  ReportDocument r;
  r.kind = std::holds_alternative<CurveSpec>(in) ? "curve" : "star-polynomial";
  r.n = h.n;
  r.d = degree_of(in);
  r.rank = h.rank;
  r.primitive = h.primitive;
  r.full = h.full;
  r.jordan = h.jordan;
  r.spp = h.spp;
  r.spectrum = h.spp.spectrum();
  r.seifert = seifert_decomposition(h.primitive);
  r.signatures = equivariant_signature(h.primitive);
  r.symmetry = check_spp_symmetry(h.spp, h.n);
  r.conjugation = conjugation_symmetric(h.full);
  return r;
}

// JSON form ----------------------------------------------------------------

namespace io {

inline Json label_json(const RootLabel& l) { return Json{{"label", l.q().str()}, {"eigenvalue", l.negative_str()}}; }

inline Json table_json(const HodgeTable& t) {
  Json arr = Json::array();
  for (const auto& [key, m] : t) {
    Json e = label_json(key.lambda);
    e["p"] = key.p;
    e["q"] = key.q;
    e["mult"] = m;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline RootLabel label_from(const Json& e, const std::string& path) {
  return RootLabel(as_rational(field(e, "label", path), path + ".label"));
}

inline HodgeTable table_from(const Json& arr, TableKind kind, int n, const std::string& path) {
  HodgeTable t(kind, n);
  for (std::size_t i = 0; i < as_array(arr, path).size(); ++i) {
    const std::string p = index_path(path, i);
    const Json& e = arr[i];
    t.add(label_from(e, p), static_cast<int>(as_int(field(e, "p", p), p + ".p")),
          static_cast<int>(as_int(field(e, "q", p), p + ".q")), as_int(field(e, "mult", p), p + ".mult"));
  }
  return t;
}

}  // namespace io

inline Json to_json(const ReportDocument& r) {
  Json j;
  j["kind"] = r.kind;
  j["n"] = r.n;
  j["d"] = r.d;
  j["rank"] = r.rank;
  j["primitive"] = io::table_json(r.primitive);
  j["full"] = io::table_json(r.full);
  Json jordan = Json::array();
  for (const auto& [key, count] : r.jordan) {
    Json e = io::label_json(key.first);
    e["size"] = key.second;
    e["count"] = count;
    jordan.push_back(std::move(e));
  }
  j["jordan"] = std::move(jordan);
  Json spp = Json::array();
  for (const auto& [pair, m] : r.spp) spp.push_back(Json{{"alpha", pair.alpha.str()}, {"omega", pair.omega}, {"mult", m}});
  j["spp"] = std::move(spp);
  Json spectrum = Json::array();
  for (const auto& [alpha, m] : r.spectrum) spectrum.push_back(Json{{"alpha", alpha.str()}, {"mult", m}});
  j["spectrum"] = std::move(spectrum);
  Json seifert = Json::array();
  for (const auto& [block, count] : r.seifert) {
    Json e = io::label_json(block.lambda);
    e["size"] = block.size;
    e["sign"] = block.sign;
    e["count"] = count;
    seifert.push_back(std::move(e));
  }
  j["seifert"] = std::move(seifert);
  Json sig = Json::array();
  for (const auto& [lambda, sigma] : r.signatures) {
    Json e = io::label_json(lambda);
    e["sigma"] = sigma;
    sig.push_back(std::move(e));
  }
  j["signatures"] = std::move(sig);
  j["symmetry"] = Json{{"sym1", r.symmetry.sym1},
                       {"sym2", r.symmetry.sym2},
                       {"spectrum_symmetric", r.symmetry.spectrum_symmetric},
                       {"conjugation", r.conjugation}};
  return j;
}

inline ReportDocument report_from_json(const Json& j) {
  using namespace io;
  ReportDocument r;
  const auto boolean = [](const Json& v, const std::string& path) {
    if (!v.is_boolean()) throw ParseError(path + ": expected a boolean");
    return v.get<bool>();
  };
  const Json& kind = field(j, "kind", "$");
  if (!kind.is_string()) throw ParseError("$.kind: expected a string");
  r.kind = kind.get<std::string>();
  r.n = static_cast<int>(as_int(field(j, "n", "$"), "$.n"));
  r.d = static_cast<int>(as_int(field(j, "d", "$"), "$.d"));
  r.rank = as_int(field(j, "rank", "$"), "$.rank");
  r.primitive = table_from(field(j, "primitive", "$"), TableKind::primitive, r.n, "$.primitive");
  r.full = table_from(field(j, "full", "$"), TableKind::full, r.n, "$.full");
  const Json& jordan = as_array(field(j, "jordan", "$"), "$.jordan");
  for (std::size_t i = 0; i < jordan.size(); ++i) {
    const std::string p = index_path("$.jordan", i);
    r.jordan[{label_from(jordan[i], p), static_cast<int>(as_int(field(jordan[i], "size", p), p + ".size"))}] +=
        as_int(field(jordan[i], "count", p), p + ".count");
  }
  const Json& spp = as_array(field(j, "spp", "$"), "$.spp");
  for (std::size_t i = 0; i < spp.size(); ++i) {
    const std::string p = index_path("$.spp", i);
    r.spp.add({as_rational(field(spp[i], "alpha", p), p + ".alpha"), as_int(field(spp[i], "omega", p), p + ".omega")},
              as_int(field(spp[i], "mult", p), p + ".mult"));
  }
  const Json& spectrum = as_array(field(j, "spectrum", "$"), "$.spectrum");
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const std::string p = index_path("$.spectrum", i);
    r.spectrum[as_rational(field(spectrum[i], "alpha", p), p + ".alpha")] +=
        as_int(field(spectrum[i], "mult", p), p + ".mult");
  }
  const Json& seifert = as_array(field(j, "seifert", "$"), "$.seifert");
  for (std::size_t i = 0; i < seifert.size(); ++i) {
    const std::string p = index_path("$.seifert", i);
    const Json& e = seifert[i];
    VariationBlock b{label_from(e, p), static_cast<int>(as_int(field(e, "size", p), p + ".size")),
                     static_cast<int>(as_int(field(e, "sign", p), p + ".sign"))};
    r.seifert[b] += as_int(field(e, "count", p), p + ".count");
  }
  const Json& sig = as_array(field(j, "signatures", "$"), "$.signatures");
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const std::string p = index_path("$.signatures", i);
    r.signatures[label_from(sig[i], p)] = as_int(field(sig[i], "sigma", p), p + ".sigma");
  }
  const Json& sym = field(j, "symmetry", "$");
  r.symmetry.sym1 = boolean(field(sym, "sym1", "$.symmetry"), "$.symmetry.sym1");
  r.symmetry.sym2 = boolean(field(sym, "sym2", "$.symmetry"), "$.symmetry.sym2");
  r.symmetry.spectrum_symmetric =
      boolean(field(sym, "spectrum_symmetric", "$.symmetry"), "$.symmetry.spectrum_symmetric");
  r.conjugation = boolean(field(sym, "conjugation", "$.symmetry"), "$.symmetry.conjugation");
  return r;
}

// Text form ----------------------------------------------------------------

namespace detail {

/// Left-aligned columns separated by two spaces.
inline std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << "  " << line << '\n';
  }
  return os.str();
}

inline std::string render_table(const HodgeTable& t) {
  std::vector<std::vector<std::string>> rows{{"label", "eigenvalue", "p", "q", "mult"}};
  for (const auto& [key, m] : t)
    rows.push_back({key.lambda.q().str(), key.lambda.negative_str(), std::to_string(key.p), std::to_string(key.q),
                    std::to_string(m)});
  return render_columns(rows);
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::string render_text(const ReportDocument& r) {
  std::ostringstream os;
  os << "kind: " << r.kind << "  n: " << r.n << "  d: " << r.d << "  rank: " << r.rank << "\n\n";
  os << "primitive Hodge numbers p^{p,q}_lambda\n" << detail::render_table(r.primitive) << '\n';
  os << "full Hodge numbers h^{p,q}_lambda\n" << detail::render_table(r.full) << '\n';

  std::vector<std::vector<std::string>> jordan{{"label", "eigenvalue", "size", "count"}};
  for (const auto& [key, count] : r.jordan)
    jordan.push_back({key.first.q().str(), key.first.negative_str(), std::to_string(key.second), std::to_string(count)});
  os << "Jordan blocks of the monodromy at infinity\n" << detail::render_columns(jordan) << '\n';

  std::vector<std::vector<std::string>> spp{{"alpha", "omega", "mult"}};
  for (const auto& [pair, m] : r.spp) spp.push_back({pair.alpha.str(), std::to_string(pair.omega), std::to_string(m)});
  os << "spectral pairs\n" << detail::render_columns(spp) << '\n';

  std::vector<std::vector<std::string>> sp{{"alpha", "mult"}};
  for (const auto& [alpha, m] : r.spectrum) sp.push_back({alpha.str(), std::to_string(m)});
  os << "spectrum\n" << detail::render_columns(sp) << '\n';

  std::vector<std::vector<std::string>> seifert{{"label", "eigenvalue", "size", "sign", "count"}};
  for (const auto& [b, count] : r.seifert)
    seifert.push_back({b.lambda.q().str(), b.lambda.negative_str(), std::to_string(b.size), b.sign > 0 ? "+1" : "-1",
                       std::to_string(count)});
  os << "Seifert form blocks W^size_lambda(sign)\n" << detail::render_columns(seifert) << '\n';

  std::vector<std::vector<std::string>> sig{{"label", "eigenvalue", "sigma"}};
  for (const auto& [lambda, sigma] : r.signatures)
    sig.push_back({lambda.q().str(), lambda.negative_str(), std::to_string(sigma)});
  os << "equivariant signatures\n" << detail::render_columns(sig) << '\n';

  os << "symmetries\n"
     << detail::render_columns({{"(alpha, n+k) <-> (alpha+k, n-k)", detail::yes_no(r.symmetry.sym1)},
                                {"(alpha, n+k) <-> (n-1-alpha, n-k)", detail::yes_no(r.symmetry.sym2)},
                                {"spectrum symmetric about (n-1)/2", detail::yes_no(r.symmetry.spectrum_symmetric)},
                                {"h^{a,b}_lambda = h^{b,a}_conj(lambda)", detail::yes_no(r.conjugation)}});
  return os.str();
}

// Self-check ---------------------------------------------------------------

enum class CheckStatus { pass, fail, not_applicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    default: return "not applicable";
  }
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool passed() const {
    return std::none_of(items.begin(), items.end(), [](const CheckItem& i) { return i.status == CheckStatus::fail; });
  }
  std::string str() const {
    std::vector<std::vector<std::string>> rows;
    for (const auto& i : items) rows.push_back({to_string(i.status), i.name, i.detail});
    return detail::render_columns(rows);
  }
};

namespace detail {
template <class T>
std::string stream_str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
}  // namespace detail

/// Runs every internal consistency property on one input.
inline CheckReport selfcheck(const AnalysisInput& in) {
  CheckReport out;
  auto add = [&](std::string name, bool ok, std::string fail_detail) {
    out.items.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, ok ? "" : std::move(fail_detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    out.items.push_back({std::move(name), CheckStatus::not_applicable, std::move(why)});
  };

  const InfinityHodge h = compute_infinity(in);
  const int n = h.n;
  const int d = degree_of(in);
  const SymmetryReport sym = check_spp_symmetry(h.spp, n);
  const std::string spp_str = detail::stream_str(h.spp);
  add("Spp symmetry (alpha, n+k) <-> (alpha+k, n-k)", sym.sym1, spp_str);
  add("Spp symmetry (alpha, n+k) <-> (n-1-alpha, n-k)", sym.sym2, spp_str);
  add("spectrum symmetric about (n-1)/2", sym.spectrum_symmetric, spp_str);
  add("conjugation h^{a,b}_lambda = h^{b,a}_conj(lambda)", conjugation_symmetric(h.full),
      detail::stream_str(h.full));
  add("rank equals total Jordan mass", [&] {
    std::int64_t mass = 0;
    for (const auto& [key, count] : h.jordan) mass += key.second * count;
    return mass == h.rank && h.spp.total() == h.rank;
  }(), "rank " + std::to_string(h.rank));
  add("Jordan block size bounds", jordan_bounds_hold(h.jordan, n, d), detail::stream_str(h.primitive));

  const SeifertDecomposition blocks = seifert_decomposition(h.primitive);
  const auto sig_formula = equivariant_signature(h.primitive);
  const auto sig_blocks = signature_from_decomposition(blocks);
  add("signature from Seifert blocks equals the primitive-number formula", sig_formula == sig_blocks,
      "blocks " + detail::stream_str(blocks));
  try {
    const SeifertDecomposition back = seifert_from_mod2(spp_mod2(h.spp), n);
    add("Seifert form recovered from Spp mod 2", back == blocks,
        "expected " + detail::stream_str(blocks) + ", got " + detail::stream_str(back));
  } catch (const AmbiguousResidue& e) {
    add("Seifert form recovered from Spp mod 2", false, e.what());
  }

  if (const auto* spec = std::get_if<StarPolynomialSpec>(&in)) {
    const auto st = global_st_check(*spec);
    add("Spp(f + x^d) = Spp(f) * S_d", st.equal,
        "lhs " + detail::stream_str(st.lhs) + " rhs " + detail::stream_str(st.rhs));
    const auto tw = twisted_aggregate_check(*spec, h.full);
    add("eigenvalues off the d-th roots match the twisted local suspensions", tw.equal,
        "lhs " + detail::stream_str(tw.lhs) + " rhs " + detail::stream_str(tw.rhs));
  } else {
    skip("Spp(f + x^d) = Spp(f) * S_d", "curve input");
    skip("eigenvalues off the d-th roots match the twisted local suspensions", "curve input");
  }
  return out;
}

/// Semicontinuity of the spectrum: `deformed` should be a deformation of
/// `special` of the same degree.
inline SemicontinuityReport compare(const AnalysisInput& special, const AnalysisInput& deformed) {
  if (degree_of(special) != degree_of(deformed)) throw ValidationError("compare: inputs have different degrees");
  if (dimension_of(special) != dimension_of(deformed))
    throw ValidationError("compare: inputs have different dimensions");
  return semicontinuity_report(compute_infinity(special).spp, compute_infinity(deformed).spp, degree_of(special));
}

}  // namespace hodgeinf
