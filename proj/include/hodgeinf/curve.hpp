#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/hodge_table.hpp"
#include "hodgeinf/rational.hpp"

namespace hodgeinf {

/// Plane curve case: f_d is a product of m distinct linear forms l_j^{alpha_j}.
struct CurveSpec {
  std::vector<std::int64_t> multiplicities;

  std::int64_t d() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0}); }
  std::int64_t gcd() const {
    std::int64_t g = 0;
    for (auto a : multiplicities) g = std::gcd(g, a);
    return g;
  }
  std::int64_t m() const { return static_cast<std::int64_t>(multiplicities.size()); }

  void validate() const {
    if (multiplicities.empty()) throw ValidationError("multiplicities: at least one linear factor is required");
    for (std::size_t j = 0; j < multiplicities.size(); ++j)
      if (multiplicities[j] < 1)
        throw ValidationError("multiplicities[" + std::to_string(j) + "]: must be >= 1");
    if (d() < 2) throw DegreeTooSmall("multiplicities: degree sum must be >= 2");
  }
};

namespace detail {
inline std::int64_t delta(const Rational& x) { return x.is_integer() ? 1 : 0; }

inline void put_curve(HodgeTable& t, const RootLabel& lambda, int p, int q, std::int64_t v, const std::string& what) {
  if (v < 0)
    throw NegativeFormula(what + " at " + lambda.negative_str() + " evaluates to " + std::to_string(v) +
                          "; the multiplicities are not realizable");
  t.add(lambda, p, q, v);
}
}  // namespace detail

/// Closed-form primitive numbers of the MHS at infinity for n = 1.
inline HodgeTable curve_primitives(const CurveSpec& c) {
  c.validate();
  const std::int64_t d = c.d();
  const std::int64_t a = c.gcd();
  HodgeTable out(TableKind::primitive, 1);
  detail::put_curve(out, RootLabel::one(), 1, 1, c.m() - 1, "p^{1,1}");

  // eigenvalues e(-s/d)
  for (std::int64_t s = 1; s < d; ++s) {
    const RootLabel xi(Rational(BigInt(d - s), BigInt(d)));
    const std::int64_t da = detail::delta(Rational(BigInt(s * a), BigInt(d)));
    std::int64_t p11 = -da, p01 = -s - 1 + da, p10 = s - 1 + da;
    for (auto aj : c.multiplicities) {
      const Rational x(BigInt(s * aj), BigInt(d));
      p11 += detail::delta(x);
      p01 += x.ceil_int();
      p10 -= x.floor_int();
    }
    detail::put_curve(out, xi, 1, 1, p11, "p^{1,1}");
    detail::put_curve(out, xi, 0, 1, p01, "p^{0,1}");
    detail::put_curve(out, xi, 1, 0, p10, "p^{1,0}");
  }

  // xi = e(-beta) with xi^d != 1, xi^{d-1} != 1 and xi^{(d-1) alpha_j} = 1 for some j
  std::set<Rational> betas;
  for (auto aj : c.multiplicities) {
    const std::int64_t N = (d - 1) * aj;
    for (std::int64_t k = 1; k < N; ++k) {
      const Rational beta{BigInt(k), BigInt(N)};
      if ((Rational(d) * beta).is_integer() || (Rational(d - 1) * beta).is_integer()) continue;
      betas.insert(beta);
    }
  }
  for (const Rational& beta : betas) {
    const Rational gamma = (Rational(d - 1) * beta).frac();
    std::int64_t count = 0;
    for (auto aj : c.multiplicities)
      if ((Rational((d - 1) * aj) * beta).is_integer()) ++count;
    const RootLabel xi = RootLabel::from_negative_exponent(beta);
    if (beta + gamma < Rational(1))
      out.add(xi, 0, 1, count);
    else
      out.add(xi, 1, 0, count);
  }
  return out;
}

/// h^{1,1} of the eigenspace e(s/d) of P^2 of the cyclic cover: delta(s alpha / d).
inline std::int64_t curve_cover_h11(const CurveSpec& c, std::int64_t s) {
  c.validate();
  if (s <= 0 || s >= c.d()) throw ValidationError("curve_cover_h11: sector must satisfy 0 < s < d");
  return detail::delta(Rational(BigInt(s * c.gcd()), BigInt(c.d())));
}

}  // namespace hodgeinf
