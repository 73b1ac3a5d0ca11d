#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodgeinf/hodgeinf.hpp"

namespace testing_support {

using namespace hodgeinf;

inline Rational r(std::int64_t a, std::int64_t b = 1) { return Rational(BigInt(a), BigInt(b)); }
inline RootLabel label(std::int64_t a, std::int64_t b) { return RootLabel(r(a, b)); }
inline RootLabel neg_label(std::int64_t a, std::int64_t b) { return RootLabel::from_negative_exponent(r(a, b)); }

inline std::string fixture(const std::string& name) { return std::string(HODGEINF_FIXTURE_DIR) + "/" + name; }

inline AnalysisInput load_fixture(const std::string& name) { return load_spec(fixture(name)); }

// Random generators --------------------------------------------------------

inline Rational random_rational(std::mt19937& rng, int max_den, int lo, int hi) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int b = den(rng);
  std::uniform_int_distribution<int> num(lo * b, hi * b);
  return r(num(rng), b);
}

inline SppSet random_spp(std::mt19937& rng, int size, int max_omega = 4) {
  SppSet s;
  std::uniform_int_distribution<int> omega(0, max_omega), mult(1, 3);
  for (int i = 0; i < size; ++i) s.add({random_rational(rng, 6, -2, 2), omega(rng)}, mult(rng));
  return s;
}

inline RootLabel random_label(std::mt19937& rng, int max_den = 12) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int b = den(rng);
  std::uniform_int_distribution<int> num(0, b - 1);
  return label(num(rng), b);
}

/// A primitive table at level N with entries above the center.
inline HodgeTable random_primitive(std::mt19937& rng, int level, int entries) {
  HodgeTable t(TableKind::primitive, level);
  std::uniform_int_distribution<int> idx(0, level + 1), extra(0, 2), mult(1, 3);
  for (int i = 0; i < entries; ++i) {
    const RootLabel l = random_label(rng, 6);
    const int c = t.center(l);
    const int p = idx(rng);
    const int q = std::max(c - p, 0) + extra(rng);
    t.add(l, p, q, mult(rng));
  }
  return t;
}

inline std::vector<int> random_exponents(std::mt19937& rng, int k, int max_exp = 6) {
  std::uniform_int_distribution<int> e(2, max_exp);
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.push_back(e(rng));
  return out;
}

}  // namespace testing_support
