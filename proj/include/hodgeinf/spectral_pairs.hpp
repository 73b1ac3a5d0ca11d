#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <utility>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/rational.hpp"

namespace hodgeinf {

struct SpectralPair {
  Rational alpha;
  std::int64_t omega = 0;

  friend bool operator==(const SpectralPair&, const SpectralPair&) = default;
  friend std::strong_ordering operator<=>(const SpectralPair& a, const SpectralPair& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.omega <=> b.omega;
  }
  friend std::ostream& operator<<(std::ostream& os, const SpectralPair& s) {
    return os << '(' << s.alpha << ',' << s.omega << ')';
  }
};

/// Element of Z[Q x N]: a multiset of spectral pairs with signed
/// multiplicities. Zero multiplicities are never stored.
class SppSet {
 public:
  using Map = std::map<SpectralPair, std::int64_t>;

  SppSet() = default;
  SppSet(std::initializer_list<std::pair<const SpectralPair, std::int64_t>> init) {
    for (const auto& [pair, mult] : init) add(pair, mult);
  }

  void add(const SpectralPair& pair, std::int64_t mult = 1) {
    if (mult == 0) return;
    auto [it, inserted] = pairs_.try_emplace(pair, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) pairs_.erase(it);
    }
  }

  std::int64_t count(const SpectralPair& pair) const {
    auto it = pairs_.find(pair);
    return it == pairs_.end() ? 0 : it->second;
  }

  /// Sum of multiplicities (the rank of the encoded structure).
  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [pair, mult] : pairs_) t += mult;
    return t;
  }

  bool empty() const { return pairs_.empty(); }
  std::size_t distinct() const { return pairs_.size(); }

  /// True when every multiplicity and every weight is non-negative.
  bool is_final() const {
    for (const auto& [pair, mult] : pairs_)
      if (mult < 0 || pair.omega < 0) return false;
    return true;
  }

  /// Spectrum: the first projection, as a multiset of rationals.
  std::map<Rational, std::int64_t> spectrum() const {
    std::map<Rational, std::int64_t> sp;
    for (const auto& [pair, mult] : pairs_) sp[pair.alpha] += mult;
    return sp;
  }

  const Map& pairs() const { return pairs_; }
  Map::const_iterator begin() const { return pairs_.begin(); }
  Map::const_iterator end() const { return pairs_.end(); }

  SppSet& operator+=(const SppSet& o) {
    for (const auto& [pair, mult] : o) add(pair, mult);
    return *this;
  }
  SppSet& operator-=(const SppSet& o) {
    for (const auto& [pair, mult] : o) add(pair, -mult);
    return *this;
  }
  friend SppSet operator+(SppSet a, const SppSet& b) { return a += b; }
  friend SppSet operator-(SppSet a, const SppSet& b) { return a -= b; }
  friend bool operator==(const SppSet&, const SppSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SppSet& s) {
    os << '{';
    bool first = true;
    for (const auto& [pair, mult] : s) {
      if (!first) os << ", ";
      first = false;
      os << pair;
      if (mult != 1) os << 'x' << mult;
    }
    return os << '}';
  }

 private:
  Map pairs_;
};

/// Sebastiani-Thom join, extended bilinearly:
/// (a, w) * (a', w') = (a + a' + 1, w + w' + 1).
inline SppSet spp_join(const SppSet& a, const SppSet& b) {
  SppSet out;
  for (const auto& [x, m] : a)
    for (const auto& [y, k] : b)
      out.add({x.alpha + y.alpha + Rational(1), x.omega + y.omega + 1}, m * k);
  return out;
}

/// T(a, b): (alpha, omega) -> (alpha + a, omega + a + b). The shift a must be
/// an integer so that the weight stays integral.
inline SppSet spp_shift(const SppSet& s, const Rational& a, std::int64_t b) {
  if (!a.is_integer()) throw NonIntegralShift("spp_shift: shift " + a.str() + " is not an integer");
  const std::int64_t ai = a.to_int();
  SppSet out;
  for (const auto& [pair, mult] : s) out.add({pair.alpha + a, pair.omega + ai + b}, mult);
  return out;
}

/// S_d = sum over 0 < s < d of (-s/d, 0): the spectral pairs of x^d.
inline SppSet sd_set(int d) {
  if (d < 2) throw DegreeTooSmall("sd_set: degree must be >= 2, got " + std::to_string(d));
  SppSet out;
  for (int s = 1; s < d; ++s) out.add({Rational(BigInt(-s), BigInt(d)), 0});
  return out;
}

}  // namespace hodgeinf
