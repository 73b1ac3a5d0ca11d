#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/global_hodge.hpp"
#include "hodgeinf/hodge_table.hpp"
#include "hodgeinf/local_models.hpp"
#include "hodgeinf/spectral_pairs.hpp"

namespace hodgeinf {

/// Input describing the top-degree form f_d of a (*)-polynomial in n+1
/// variables: its degree, the isolated singularities of {f_d = 0} in P^n
/// (germs in n variables) and the position-dependent pure Hodge numbers.
/// Lower-order terms of f do not affect the invariants and are not part of
/// the input.
struct StarPolynomialSpec {
  int n = 2;
  int d = 2;
  std::vector<LocalModel> locals;
  GlobalPositionData global;

  void validate() const {
    if (n < 2) throw ValidationError("n: the general pipeline needs n >= 2 (use the curve form for n = 1)");
    if (d < 2) throw DegreeTooSmall("d: degree must be >= 2");
    for (std::size_t j = 0; j < locals.size(); ++j)
      if (locals[j].variables() != n)
        throw ValidationError("singularities[" + std::to_string(j) + "]: germ has " +
                              std::to_string(locals[j].variables()) + " variables, expected n = " +
                              std::to_string(n));
    global.validate(n, d);
  }

  std::vector<LocalSpectrum> local_spectra() const {
    std::vector<LocalSpectrum> out;
    out.reserve(locals.size());
    for (const auto& m : locals) out.push_back(local_spectral_pairs(m));
    return out;
  }
};

/// Number of Jordan blocks of the monodromy at infinity, keyed by
/// (eigenvalue, block size).
using JordanStructure = std::map<std::pair<RootLabel, int>, std::int64_t>;

struct InfinityHodge {
  int n = 0;
  HodgeTable primitive;
  HodgeTable full;
  JordanStructure jordan;
  SppSet spp;
  std::int64_t rank = 0;

  int max_jordan_block() const {
    int m = 0;
    for (const auto& [key, count] : jordan) m = std::max(m, key.second);
    return m;
  }
  int max_jordan_block(const RootLabel& lambda) const {
    int m = 0;
    for (const auto& [key, count] : jordan)
      if (key.first == lambda) m = std::max(m, key.second);
    return m;
  }
};

/// Primitive equivariant Hodge numbers of the MHS at infinity (level n,
/// center n, or n+1 at eigenvalue 1).
///
/// Eigenvalue 1 comes from P^{n-1}(X_inf), the d-th roots of unity from the
/// Galois eigenspaces of the cyclic cover, and every other eigenvalue lambda
/// from the local primitive numbers at lambda^{1-d}.
inline HodgeTable primitives_at_infinity(const StarPolynomialSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int d = spec.d;
  const auto locals = spec.local_spectra();
  HodgeTable out(TableKind::primitive, n);

  for (const auto& [ij, m] : hodge_X_infinity(locals, spec.global, n, d))
    out.add(RootLabel::one(), n - ij.second, n - ij.first, m);
  for (const auto& [s, h] : hodge_cover(locals, spec.global, n, d)) {
    const RootLabel xi{Rational(BigInt(s), BigInt(d))};
    for (const auto& [ij, m] : h) out.add(xi, n - ij.second, n - ij.first, m);
  }

  HodgeTable local(TableKind::primitive, n - 1);
  for (const auto& spec_j : locals)
    for (const auto& [key, m] : local_primitive_table(spec_j)) local.add(key.lambda, key.p, key.q, m);

  // lambda^{1-d} = mu has the d-1 solutions lambda = e((k - q(mu)) / (d-1))
  std::set<RootLabel> candidates;
  for (const RootLabel& mu : local.labels())
    for (int k = 0; k <= d - 2; ++k) {
      const RootLabel x((Rational(k) - mu.q()) / Rational(d - 1));
      if (!x.has_order_dividing(d)) candidates.insert(x);
    }
  for (const RootLabel& x : candidates) {
    const Rational beta = x.beta();
    const Rational gamma = (Rational(d - 1) * beta).frac();
    const int delta = gamma.is_zero() ? 0 : 1;
    const int fb = static_cast<int>((beta + gamma).floor_int());
    const RootLabel source = x.power(1 - d);
    for (const auto& [key, m] : local)
      if (key.lambda == source) out.add(x, key.p + fb, key.q + delta - fb, m);
  }
  return out;
}

inline HodgeTable full_at_infinity(const HodgeTable& primitive) { return full_from_primitive(primitive); }

/// One block of size r+1 per primitive class, r = a + b - center.
inline JordanStructure jordan_structure(const HodgeTable& primitive) {
  JordanStructure out;
  for (const auto& [key, m] : primitive) {
    const int r = key.p + key.q - primitive.center(key.lambda);
    out[{key.lambda, r + 1}] += m;
  }
  return out;
}

inline SppSet spp_at_infinity(const HodgeTable& full, int n) { return encode_spp(full, n); }

/// Full pipeline from a primitive table at level n.
inline InfinityHodge infinity_hodge_from_primitive(HodgeTable primitive, int n) {
  InfinityHodge out;
  out.n = n;
  out.full = full_at_infinity(primitive);
  out.jordan = jordan_structure(primitive);
  out.spp = spp_at_infinity(out.full, n);
  out.rank = out.full.total();
  out.primitive = std::move(primitive);
  return out;
}

inline InfinityHodge infinity_hodge(const StarPolynomialSpec& spec) {
  return infinity_hodge_from_primitive(primitives_at_infinity(spec), spec.n);
}

/// h^{a,b}_lambda = h^{b,a}_{conj(lambda)} for every entry.
inline bool conjugation_symmetric(const HodgeTable& full) {
  for (const auto& [key, m] : full)
    if (full.at(key.lambda.conjugate(), key.q, key.p) != m) return false;
  return true;
}

/// Block sizes at most n+1 at roots of unity of order dividing d (other than
/// 1) and at most n elsewhere.
inline bool jordan_bounds_hold(const JordanStructure& jordan, int n, int d) {
  for (const auto& [key, count] : jordan) {
    const auto& [lambda, size] = key;
    if (lambda.is_one()) continue;
    if (size > (lambda.has_order_dividing(d) ? n + 1 : n)) return false;
  }
  return true;
}

/// Eigenvalues lambda with lambda^d != 1, gathered by eta = lambda^d, against
/// the twisted suspensions of the local germs at eta^{-1}.
struct TwistedAggregateCheck {
  HodgeTable lhs;
  HodgeTable rhs;
  bool equal = false;
};

inline TwistedAggregateCheck twisted_aggregate_check(const StarPolynomialSpec& spec, const HodgeTable& full) {
  TwistedAggregateCheck out{HodgeTable(TableKind::full, spec.n), HodgeTable(TableKind::full, spec.n), false};
  for (const auto& [key, m] : full)
    if (!key.lambda.has_order_dividing(spec.d)) out.lhs.add(key.lambda.power(-spec.d), key.p, key.q, m);
  for (const auto& local : spec.local_spectra())
    for (const auto& [key, m] : twisted_suspension(local, spec.d)) out.rhs.add(key.lambda, key.p, key.q, m);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace hodgeinf
