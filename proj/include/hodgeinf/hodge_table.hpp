#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/rational.hpp"
#include "hodgeinf/spectral_pairs.hpp"

namespace hodgeinf {

enum class TableKind { full, primitive };

inline const char* to_string(TableKind k) { return k == TableKind::full ? "full" : "primitive"; }

struct HodgeKey {
  RootLabel lambda;
  int p = 0;
  int q = 0;

  friend bool operator==(const HodgeKey&, const HodgeKey&) = default;
  friend std::strong_ordering operator<=>(const HodgeKey& a, const HodgeKey& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.q <=> b.q;
  }
};

/// Equivariant Hodge numbers (full h^{p,q}_lambda or primitive p^{p,q}_lambda).
///
/// `level` is the cohomological degree N of the ambient space. The weight
/// filtration at eigenvalue lambda is centered at center_base, shifted by one
/// at lambda = 1.
class HodgeTable {
 public:
  using Map = std::map<HodgeKey, std::int64_t>;

  HodgeTable() = default;
  HodgeTable(TableKind kind, int level) : kind_(kind), level_(level), center_base_(level) {}
  HodgeTable(TableKind kind, int level, int center_base)
      : kind_(kind), level_(level), center_base_(center_base) {}

  TableKind kind() const { return kind_; }
  int level() const { return level_; }
  int center_base() const { return center_base_; }
  int center(const RootLabel& lambda) const { return lambda.is_one() ? center_base_ + 1 : center_base_; }

  /// Adds mult to the entry; primitive tables reject entries below the center.
  void add(const RootLabel& lambda, int p, int q, std::int64_t mult) {
    if (mult == 0) return;
    if (kind_ == TableKind::primitive && p + q < center(lambda))
      throw ValidationError("primitive entry (" + std::to_string(p) + "," + std::to_string(q) + ") at " +
                            lambda.str() + " lies below the center " + std::to_string(center(lambda)));
    HodgeKey key{lambda, p, q};
    auto [it, inserted] = entries_.try_emplace(key, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) entries_.erase(it);
    }
  }

  std::int64_t at(const RootLabel& lambda, int p, int q) const {
    auto it = entries_.find(HodgeKey{lambda, p, q});
    return it == entries_.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [key, mult] : entries_) t += mult;
    return t;
  }

  bool empty() const { return entries_.empty(); }

  bool all_nonnegative() const {
    for (const auto& [key, mult] : entries_)
      if (mult < 0) return false;
    return true;
  }

  std::set<RootLabel> labels() const {
    std::set<RootLabel> out;
    for (const auto& [key, mult] : entries_) out.insert(key.lambda);
    return out;
  }

  /// Entries at one eigenvalue only, same shape.
  HodgeTable restricted_to(const RootLabel& lambda) const {
    HodgeTable out(kind_, level_, center_base_);
    for (const auto& [key, mult] : entries_)
      if (key.lambda == lambda) out.entries_.emplace(key, mult);
    return out;
  }

  const Map& entries() const { return entries_; }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

  friend std::ostream& operator<<(std::ostream& os, const HodgeTable& t) {
    os << to_string(t.kind_) << "[N=" << t.level_ << "]{";
    bool first = true;
    for (const auto& [key, mult] : t) {
      if (!first) os << ", ";
      first = false;
      os << key.lambda << ":(" << key.p << ',' << key.q << ")=" << mult;
    }
    return os << '}';
  }

 private:
  TableKind kind_ = TableKind::full;
  int level_ = 0;
  int center_base_ = 0;
  Map entries_;
};

/// Encodes a full table at level N as spectral pairs: a class of type (p,q)
/// at lambda = e(-beta) becomes alpha = N - p (beta = 0) or N - p - 1 + beta,
/// omega = p + q - [alpha is an integer].
inline SppSet encode_spp(const HodgeTable& table, int level) {
  if (table.kind() != TableKind::full) throw ValidationError("encode_spp expects a full table");
  SppSet out;
  for (const auto& [key, mult] : table) {
    const Rational beta = key.lambda.beta();
    Rational alpha = beta.is_zero() ? Rational(level - key.p) : Rational(level - key.p - 1) + beta;
    const int s = alpha.is_integer() ? 1 : 0;
    out.add({alpha, static_cast<std::int64_t>(key.p + key.q - s)}, mult);
  }
  return out;
}

/// Inverse of encode_spp at the same level.
inline HodgeTable decode_spp(const SppSet& set, int level) {
  HodgeTable out(TableKind::full, level);
  for (const auto& [pair, mult] : set) {
    if (mult < 0)
      throw NegativeMultiplicity("decode_spp: pair (" + pair.alpha.str() + "," + std::to_string(pair.omega) +
                                 ") has multiplicity " + std::to_string(mult));
    if (pair.omega < 0) throw ValidationError("decode_spp: negative weight in pair " + pair.alpha.str());
    const Rational minus_alpha = -pair.alpha;
    const int p = level + static_cast<int>(minus_alpha.floor_int());
    const int s = pair.alpha.is_integer() ? 1 : 0;
    const int q = static_cast<int>(pair.omega) + s - p;
    out.add(RootLabel(minus_alpha), p, q, mult);
  }
  return out;
}

/// Full Hodge numbers from primitive ones: above the center
/// h^{a,b} = sum_l p^{a+l,b+l}; below it h^{a,b} = h^{c-b,c-a}.
inline HodgeTable full_from_primitive(const HodgeTable& prim) {
  if (prim.kind() != TableKind::primitive) throw ValidationError("full_from_primitive expects a primitive table");
  HodgeTable out(TableKind::full, prim.level(), prim.center_base());
  // upper half, including the center line
  for (const auto& [key, mult] : prim) {
    const int c = prim.center(key.lambda);
    for (int l = 0; (key.p - l) + (key.q - l) >= c; ++l) out.add(key.lambda, key.p - l, key.q - l, mult);
  }
  HodgeTable upper = out;
  for (const auto& [key, mult] : upper) {
    const int c = out.center(key.lambda);
    if (key.p + key.q > c) out.add(key.lambda, c - key.q, c - key.p, mult);
  }
  return out;
}

/// Primitive numbers p^{a,b} = h^{a,b} - h^{a+1,b+1} for a + b >= c.
/// Throws NotWeightMonotone if the table is not the full table of some
/// primitive decomposition.
inline HodgeTable primitive_from_full(const HodgeTable& full) {
  if (full.kind() != TableKind::full) throw ValidationError("primitive_from_full expects a full table");
  HodgeTable out(TableKind::primitive, full.level(), full.center_base());
  for (const auto& [key, mult] : full) {
    const int c = full.center(key.lambda);
    const auto where = [&] {
      return key.lambda.str() + " (" + std::to_string(key.p) + "," + std::to_string(key.q) + ")";
    };
    if (mult < 0) throw NotWeightMonotone("negative Hodge number at " + where());
    if (key.p + key.q >= c) {
      const std::int64_t v = mult - full.at(key.lambda, key.p + 1, key.q + 1);
      if (v < 0) throw NotWeightMonotone("h decreases toward the center at " + where());
      out.add(key.lambda, key.p, key.q, v);
    } else if (full.at(key.lambda, c - key.q, c - key.p) != mult) {
      throw NotWeightMonotone("weight filtration is not symmetric about the center at " + where());
    }
  }
  // every entry above the center needs its mirror image below
  for (const auto& [key, mult] : full) {
    const int c = full.center(key.lambda);
    if (key.p + key.q > c && full.at(key.lambda, c - key.q, c - key.p) != mult)
      throw NotWeightMonotone("missing mirror entry for " + key.lambda.str() + " (" + std::to_string(key.p) +
                              "," + std::to_string(key.q) + ")");
  }
  return out;
}

}  // namespace hodgeinf
