#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/hodge_table.hpp"
#include "hodgeinf/rational.hpp"
#include "hodgeinf/spectral_pairs.hpp"

namespace hodgeinf {

/// Indecomposable real variation structure W^size_lambda(sign).
struct VariationBlock {
  RootLabel lambda;
  int size = 1;
  int sign = 1;

  friend bool operator==(const VariationBlock&, const VariationBlock&) = default;
  friend std::strong_ordering operator<=>(const VariationBlock& a, const VariationBlock& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    if (auto c = a.size <=> b.size; c != 0) return c;
    return a.sign <=> b.sign;
  }
  std::string str() const {
    return "W^" + std::to_string(size) + "_" + lambda.str() + "(" + (sign > 0 ? "+1" : "-1") + ")";
  }
};

using SeifertDecomposition = std::map<VariationBlock, std::int64_t>;

inline std::ostream& operator<<(std::ostream& os, const SeifertDecomposition& s) {
  bool first = true;
  for (const auto& [block, count] : s) {
    os << (first ? "" : " + ") << count << "*" << block.str();
    first = false;
  }
  return os;
}

inline int sign_of_parity(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// Every primitive class p^{a,b}_lambda gives a block W^{r+1}_lambda((-1)^b)
/// with r = a + b - center(lambda).
inline SeifertDecomposition seifert_decomposition(const HodgeTable& primitive) {
  if (primitive.kind() != TableKind::primitive) throw ValidationError("seifert_decomposition expects a primitive table");
  SeifertDecomposition out;
  for (const auto& [key, m] : primitive) {
    const int r = key.p + key.q - primitive.center(key.lambda);
    out[{key.lambda, r + 1, sign_of_parity(key.q)}] += m;
  }
  return out;
}

/// sigma_lambda = sum (-1)^b p^{a,b}_lambda (1 + (-1)^{a+b-n}) / 2 over primitive classes.
inline std::map<RootLabel, std::int64_t> equivariant_signature(const HodgeTable& primitive) {
  const int n = primitive.center_base();
  std::map<RootLabel, std::int64_t> out;
  for (const auto& [key, m] : primitive) {
    auto& sigma = out[key.lambda];
    if ((key.p + key.q - n) % 2 == 0) sigma += sign_of_parity(key.q) * m;
  }
  return out;
}

/// Signature read off the blocks: W^k_lambda(eps) contributes eps when k is
/// odd (lambda != 1) or even (lambda = 1), else nothing.
inline std::map<RootLabel, std::int64_t> signature_from_decomposition(const SeifertDecomposition& blocks) {
  std::map<RootLabel, std::int64_t> out;
  for (const auto& [block, count] : blocks) {
    auto& sigma = out[block.lambda];
    const bool odd = block.size % 2 == 1;
    if (odd != block.lambda.is_one()) sigma += block.sign * count;
  }
  return out;
}

/// Spectral pairs with alpha taken modulo 2.
using SppMod2 = std::map<std::pair<Rational, std::int64_t>, std::int64_t>;

inline SppMod2 spp_mod2(const SppSet& s) {
  SppMod2 out;
  for (const auto& [pair, m] : s) {
    auto& slot = out[{pair.alpha.mod(2), pair.omega}];
    slot += m;
    if (slot == 0) out.erase({pair.alpha.mod(2), pair.omega});
  }
  return out;
}

/// Recovers the Seifert decomposition from Spp mod 2 at level n.
///
/// A primitive class of block size r+1 encodes to the chain
/// (alpha_0 + l, omega_0 - 2l), l = 0..r, centered at omega = n. Along a chain
/// alpha + omega/2 is constant, so modulo 2 the pairs split into groups by
/// (e(-alpha), alpha + omega/2 mod 2). Inside a group the number of chains
/// with top weight exactly w >= n is cnt(w) - cnt(w+2). For the top pair,
/// a = n - ceil(alpha_0) and b = omega_0 + [lambda = 1] - a modulo 2 give the
/// sign (-1)^b.
inline SeifertDecomposition seifert_from_mod2(const SppMod2& m, int n) {
  std::map<std::pair<RootLabel, Rational>, std::map<std::int64_t, std::int64_t>> groups;
  for (const auto& [key, mult] : m) {
    const auto& [residue, omega] = key;
    if (mult < 0) throw AmbiguousResidue("negative multiplicity at residue " + residue.str());
    const Rational c = (residue + Rational(BigInt(omega), BigInt(2))).mod(2);
    groups[{RootLabel(-residue), c}][omega] += mult;
  }
  SeifertDecomposition out;
  for (const auto& [gkey, cnt] : groups) {
    const auto& [lambda, c] = gkey;
    auto count = [&](std::int64_t w) {
      auto it = cnt.find(w);
      return it == cnt.end() ? std::int64_t{0} : it->second;
    };
    const std::int64_t top = cnt.rbegin()->first;
    for (const auto& [w, k] : cnt)
      if (count(2 * n - w) != k)
        throw AmbiguousResidue("weights at " + lambda.str() + " are not symmetric about " + std::to_string(n));
    const int s = lambda.is_one() ? 1 : 0;
    for (std::int64_t w = n; w <= top; ++w) {
      const std::int64_t chains = count(w) - count(w + 2);
      if (chains < 0) throw AmbiguousResidue("weight counts at " + lambda.str() + " do not form chains");
      if (chains == 0) continue;
      const Rational alpha0 = (c - Rational(BigInt(w), BigInt(2))).mod(2);
      const std::int64_t a = n - alpha0.ceil_int();
      const std::int64_t b = w + s - a;
      out[{lambda, static_cast<int>(w - n + 1), sign_of_parity(b)}] += chains;
    }
  }
  return out;
}

}  // namespace hodgeinf
