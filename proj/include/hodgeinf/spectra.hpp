#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hodgeinf/global_hodge.hpp"
#include "hodgeinf/mhs_infinity.hpp"
#include "hodgeinf/spectral_pairs.hpp"

namespace hodgeinf {

struct SymmetryReport {
  bool sym1 = false;  // (alpha, n+k) <-> (alpha+k, n-k)
  bool sym2 = false;  // (alpha, n+k) <-> (n-1-alpha, n-k)
  bool spectrum_symmetric = false;

  bool all() const { return sym1 && sym2 && spectrum_symmetric; }
};

inline SymmetryReport check_spp_symmetry(const SppSet& s, int n) {
  SymmetryReport r{true, true, true};
  for (const auto& [pair, m] : s) {
    const std::int64_t k = pair.omega - n;
    const std::int64_t mirror = n - k;
    if (mirror < 0) {
      r.sym1 = r.sym2 = false;
      continue;
    }
    if (s.count({pair.alpha + Rational(k), mirror}) != m) r.sym1 = false;
    if (s.count({Rational(n - 1) - pair.alpha, mirror}) != m) r.sym2 = false;
  }
  const auto sp = s.spectrum();
  for (const auto& [alpha, m] : sp) {
    auto it = sp.find(Rational(n - 1) - alpha);
    if (it == sp.end() || it->second != m) r.spectrum_symmetric = false;
  }
  return r;
}

/// The data of f + x^d, which is again a (*)-polynomial: every germ is
/// suspended by u^d, P^{n+1}(X_inf) of the new top form is the sum of the
/// Galois eigenspaces of P^{n+1}(X'_0), and the new eigenspaces come from the
/// double-cover lift of the old pure data.
inline StarPolynomialSpec suspended_spec(const StarPolynomialSpec& spec) {
  spec.validate();
  StarPolynomialSpec out;
  out.n = spec.n + 1;
  out.d = spec.d;
  for (const auto& m : spec.locals) out.locals.push_back(LocalModel::join(m, BrieskornPham{{spec.d}}));
  for (const auto& [s, row] : spec.global.pn1_cover)
    for (const auto& [p, m] : row)
      if (m) out.global.pn_xinf[p] += m;
  const auto lifted = lift_double_cover(pure_xinf(spec.global, spec.n), pure_cover(spec.global, spec.n), spec.d);
  for (const auto& [s, h] : lifted)
    for (const auto& [pq, m] : h) {
      if (pq.first + pq.second != out.n + 1)
        throw InconsistentGlobalData("lifted cover data is not pure of weight " + std::to_string(out.n + 1));
      out.global.pn1_cover[s][pq.first] += m;
    }
  return out;
}

struct SebastianiThomCheck {
  SppSet lhs;
  SppSet rhs;
  bool equal = false;
};

/// Spp(f + x^d) computed through the full pipeline against Spp(f) * S_d.
inline SebastianiThomCheck global_st_check(const StarPolynomialSpec& spec) {
  SebastianiThomCheck out;
  out.lhs = infinity_hodge(suspended_spec(spec)).spp;
  out.rhs = spp_join(infinity_hodge(spec).spp, sd_set(spec.d));
  out.equal = out.lhs == out.rhs;
  return out;
}

enum class IntervalShape { left_open, right_open };  // (lo, hi] and [lo, hi)

struct SemicontinuityRow {
  IntervalShape shape = IntervalShape::left_open;
  Rational lo;
  Rational hi;
  std::int64_t s_f = 0;
  std::int64_t s_def = 0;
  bool ok = true;
  bool informational = false;

  std::string interval() const {
    return shape == IntervalShape::left_open ? "(" + lo.str() + ", " + hi.str() + "]"
                                             : "[" + lo.str() + ", " + hi.str() + ")";
  }
};

struct SemicontinuityReport {
  std::vector<SemicontinuityRow> rows;

  /// Verdict over the intervals (k/d, k/d + 1]; informational rows do not count.
  bool ok() const {
    for (const auto& r : rows)
      if (!r.informational && !r.ok) return false;
    return true;
  }
};

inline std::int64_t count_spectrum(const SppSet& s, const Rational& lo, const Rational& hi, IntervalShape shape) {
  std::int64_t c = 0;
  for (const auto& [pair, m] : s) {
    const bool in = shape == IntervalShape::left_open ? (pair.alpha > lo && pair.alpha <= hi)
                                                      : (pair.alpha >= lo && pair.alpha < hi);
    if (in) c += m;
  }
  return c;
}

/// Spectrum counts of f and of a deformation of the same degree on every
/// half-open interval (k/d, k/d + 1] that meets either spectrum. Rows for
/// (t, t+1] and [t, t+1) at the breakpoints of both spectra are added as
/// informational.
inline SemicontinuityReport semicontinuity_report(const SppSet& spp_f, const SppSet& spp_def, int d) {
  if (d < 2) throw DegreeTooSmall("semicontinuity_report: degree must be >= 2");
  if (!spp_f.is_final() || !spp_def.is_final()) throw ValidationError("semicontinuity_report expects final sets");
  std::set<Rational> alphas;
  for (const auto& [a, m] : spp_f.spectrum()) alphas.insert(a);
  for (const auto& [a, m] : spp_def.spectrum()) alphas.insert(a);

  SemicontinuityReport out;
  std::set<std::int64_t> ks;
  for (const Rational& a : alphas) {
    const Rational da = Rational(d) * a;
    for (std::int64_t k = (da - Rational(d)).ceil_int(); k <= da.ceil_int() - 1; ++k) ks.insert(k);
  }
  auto row = [&](IntervalShape shape, const Rational& lo, bool informational) {
    SemicontinuityRow r{shape, lo, lo + Rational(1), 0, 0, true, informational};
    r.s_f = count_spectrum(spp_f, r.lo, r.hi, shape);
    r.s_def = count_spectrum(spp_def, r.lo, r.hi, shape);
    r.ok = r.s_def >= r.s_f;
    out.rows.push_back(r);
  };
  for (std::int64_t k : ks) row(IntervalShape::left_open, Rational(BigInt(k), BigInt(d)), false);

  std::set<Rational> breaks;
  for (const Rational& a : alphas) {
    breaks.insert(a);
    breaks.insert(a - Rational(1));
  }
  std::set<Rational> ts = breaks;
  for (auto it = breaks.begin(); it != breaks.end() && std::next(it) != breaks.end(); ++it)
    ts.insert((*it + *std::next(it)) / Rational(2));
  for (const Rational& t : ts) {
    row(IntervalShape::left_open, t, true);
    row(IntervalShape::right_open, t, true);
  }
  return out;
}

}  // namespace hodgeinf
