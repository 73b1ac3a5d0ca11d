#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/hodge_table.hpp"
#include "hodgeinf/jconst.hpp"
#include "hodgeinf/local_models.hpp"

namespace hodgeinf {

/// Non-equivariant Hodge numbers h^{i,j} of one mixed Hodge structure.
using HodgeNumbers = std::map<std::pair<int, int>, std::int64_t>;

inline std::int64_t hodge_at(const HodgeNumbers& h, int i, int j) {
  auto it = h.find({i, j});
  return it == h.end() ? 0 : it->second;
}

inline std::int64_t hodge_total(const HodgeNumbers& h) {
  std::int64_t t = 0;
  for (const auto& [ij, m] : h) t += m;
  return t;
}

/// Position-dependent input: the pure structures P^n(X_inf) (weight n) and the
/// Galois eigenspaces P^{n+1}(X'_0)_{e(s/d)} (weight n+1). Only the first Hodge
/// index is stored; the second one is fixed by purity.
struct GlobalPositionData {
  std::map<int, std::int64_t> pn_xinf;
  std::map<int, std::map<int, std::int64_t>> pn1_cover;

  std::int64_t xinf(int p) const {
    auto it = pn_xinf.find(p);
    return it == pn_xinf.end() ? 0 : it->second;
  }
  std::int64_t cover(int s, int p) const {
    auto it = pn1_cover.find(s);
    if (it == pn1_cover.end()) return 0;
    auto jt = it->second.find(p);
    return jt == it->second.end() ? 0 : jt->second;
  }

  bool is_zero() const {
    for (const auto& [p, m] : pn_xinf)
      if (m != 0) return false;
    for (const auto& [s, row] : pn1_cover)
      for (const auto& [p, m] : row)
        if (m != 0) return false;
    return true;
  }

  /// Checks ranges, non-negativity and complex-conjugation symmetry.
  void validate(int n, int d) const {
    for (const auto& [p, m] : pn_xinf) {
      if (p < 0 || p > n) throw ValidationError("global.pn_xinf: index p=" + std::to_string(p) + " outside [0,n]");
      if (m < 0) throw ValidationError("global.pn_xinf: negative multiplicity at p=" + std::to_string(p));
      if (xinf(n - p) != m)
        throw ValidationError("global.pn_xinf: h^{p,q} != h^{q,p} at p=" + std::to_string(p));
    }
    for (const auto& [s, row] : pn1_cover) {
      if (s <= 0 || s >= d)
        throw ValidationError("global.pn1_cover: sector " + std::to_string(s) + " outside 1..d-1");
      for (const auto& [p, m] : row) {
        const std::string where = "global.pn1_cover." + std::to_string(s) + ": p=" + std::to_string(p);
        if (p < 0 || p > n + 1) throw ValidationError(where + " outside [0,n+1]");
        if (m < 0) throw ValidationError(where + " has negative multiplicity");
        if (cover(d - s, n + 1 - p) != m)
          throw ValidationError(where + " is not conjugate to sector " + std::to_string(d - s));
      }
    }
  }

  friend bool operator==(const GlobalPositionData&, const GlobalPositionData&) = default;
};

/// Hodge numbers of P^{n-1}(X_inf) and of the cover eigenspaces P^n(X'_0)_xi.
struct CoverHodge {
  HodgeNumbers xinf;
  std::map<int, HodgeNumbers> cover;
};

namespace detail {

/// Local terms entering the vanishing-cycle sequences: primitive numbers at
/// eigenvalue 1 and dim Gr_F^i of the whole vanishing cohomology.
struct LocalTerms {
  HodgeNumbers p1;
  std::map<int, std::int64_t> gr_f;

  void absorb(const LocalSpectrum& spec) {
    for (const auto& [key, m] : local_primitive_table(spec))
      if (key.lambda.is_one()) p1[{key.p, key.q}] += m;
    for (const auto& [key, m] : decode_spp(spec.pairs, spec.level())) gr_f[key.p] += m;
  }
  std::int64_t gr(int i) const {
    auto it = gr_f.find(i);
    return it == gr_f.end() ? 0 : it->second;
  }
  /// sum over q > i of p_1^{q, b}
  std::int64_t p1_tail(int i, int b) const {
    std::int64_t t = 0;
    for (const auto& [ab, m] : p1)
      if (ab.second == b && ab.first > i) t += m;
    return t;
  }
};

inline void put(HodgeNumbers& h, int i, int j, std::int64_t v, const std::string& what) {
  if (v < 0 || (v > 0 && (i < 0 || j < 0)))
    throw InconsistentGlobalData(what + ": h^{" + std::to_string(i) + "," + std::to_string(j) +
                                 "} = " + std::to_string(v) + " is impossible");
  if (v != 0) h[{i, j}] += v;
}

/// The three-step cascade shared by the hypersurface at infinity and the
/// cover eigenspaces. `top` is the weight of the pure structure following in
/// the sequence (n for X_inf, n+1 for X'_0), `jc(i)` the Griffiths dimension
/// of Gr_F^i of the smooth member.
template <class JC, class Pure>
HodgeNumbers vanishing_cycle_cascade(const LocalTerms& local, int top, JC jc, Pure pure, const std::string& name) {
  HodgeNumbers out;
  const int w = top - 1;  // weight of the middle part
  // weights w - k + 1 for k >= 3: purely local
  for (const auto& [ab, m] : local.p1) {
    const auto [a, b] = ab;
    if (a + b >= top + 1) put(out, w - b, w - a, m, name + " clause (a), weight " + std::to_string(2 * w - a - b));
  }
  // weight w - 1
  for (int i = -2; i <= top + 2; ++i) {
    const std::int64_t v = hodge_at(local.p1, i + 1, w - i) - pure(i + 1);
    put(out, i, w - 1 - i, v, name + " clause (b), weight " + std::to_string(w - 1));
  }
  // weight w
  for (int i = 0; i <= w; ++i) {
    const std::int64_t v = jc(i) - local.gr(i) - local.p1_tail(i, w - i) + pure(i) + pure(i + 1);
    put(out, i, w - i, v, name + " clause (c), weight " + std::to_string(w));
  }
  return out;
}

}  // namespace detail

/// Hodge numbers of P^{n-1}(X_inf) from the local singularities (germs in n
/// variables) and h(P^n(X_inf)).
inline HodgeNumbers hodge_X_infinity(const std::vector<LocalSpectrum>& locals, const GlobalPositionData& g,
                                     int n, int d) {
  if (n < 2) throw ValidationError("hodge_X_infinity requires n >= 2");
  detail::LocalTerms local;
  for (const auto& spec : locals) {
    if (spec.variables != n) throw ValidationError("local germ must have n variables");
    local.absorb(spec);
  }
  auto jc = [&](int i) { return j_constant(n, d, i, 0); };
  auto pure = [&](int p) { return g.xinf(p); };
  return detail::vanishing_cycle_cascade(local, n, jc, pure, "P^{n-1}(X_inf)");
}

/// Hodge numbers of the Galois eigenspaces P^n(X'_0)_{e(s/d)}, 0 < s < d.
inline std::map<int, HodgeNumbers> hodge_cover(const std::vector<LocalSpectrum>& locals,
                                               const GlobalPositionData& g, int n, int d) {
  if (n < 2) throw ValidationError("hodge_cover requires n >= 2");
  std::vector<GradedLocalData> suspended;
  for (const auto& spec : locals) {
    if (spec.variables != n) throw ValidationError("local germ must have n variables");
    suspended.push_back(galois_suspension(spec, d));
  }
  std::map<int, HodgeNumbers> out;
  for (int s = 1; s < d; ++s) {
    detail::LocalTerms local;
    for (const auto& sus : suspended) local.absorb(sus.sector_spectrum(s));
    auto jc = [&](int i) { return j_constant(n, d, n - i, s); };
    auto pure = [&](int p) { return g.cover(s, p); };
    out.emplace(s, detail::vanishing_cycle_cascade(local, n + 1, jc, pure,
                                                   "P^n(X'_0) sector " + std::to_string(s)));
  }
  return out;
}

inline CoverHodge cover_hodge(const std::vector<LocalSpectrum>& locals, const GlobalPositionData& g, int n, int d) {
  return {hodge_X_infinity(locals, g, n, d), hodge_cover(locals, g, n, d)};
}

/// Hodge numbers of the eigenspaces P^{k+2}(X''_0)_{e(s/d)} of the double
/// cover, from P^k(X_inf) (`base`) and the sectors of P^{k+1}(X'_0):
///   h^{p+1,q+1} = h^{p,q}(base) + sum_{0<t<d, t+s != d} h^{p+c, q+1-c}(sector (s+t) mod d),
/// c = [(s+t)/d].
inline std::map<int, HodgeNumbers> lift_double_cover(const HodgeNumbers& base,
                                                     const std::map<int, HodgeNumbers>& cover_sectors, int d) {
  if (d < 2) throw DegreeTooSmall("lift_double_cover: degree must be >= 2");
  std::map<int, HodgeNumbers> out;
  for (int s = 1; s < d; ++s) {
    HodgeNumbers h;
    for (const auto& [pq, m] : base) h[{pq.first + 1, pq.second + 1}] += m;
    for (int t = 1; t < d; ++t) {
      if (t + s == d) continue;
      const int c = (s + t) / d;
      auto it = cover_sectors.find((s + t) % d);
      if (it == cover_sectors.end()) continue;
      for (const auto& [ab, m] : it->second) h[{ab.first - c + 1, ab.second + c}] += m;
    }
    std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
    out.emplace(s, std::move(h));
  }
  return out;
}

/// Pure input structures of GlobalPositionData as Hodge numbers.
inline HodgeNumbers pure_xinf(const GlobalPositionData& g, int n) {
  HodgeNumbers h;
  for (const auto& [p, m] : g.pn_xinf)
    if (m) h[{p, n - p}] = m;
  return h;
}

inline std::map<int, HodgeNumbers> pure_cover(const GlobalPositionData& g, int n) {
  std::map<int, HodgeNumbers> out;
  for (const auto& [s, row] : g.pn1_cover)
    for (const auto& [p, m] : row)
      if (m) out[s][{p, n + 1 - p}] = m;
  return out;
}

}  // namespace hodgeinf
