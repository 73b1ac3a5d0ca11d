#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hodgeinf/errors.hpp"
#include "hodgeinf/hodge_table.hpp"
#include "hodgeinf/rational.hpp"
#include "hodgeinf/spectral_pairs.hpp"

namespace hodgeinf {

class LocalModel;

/// x_1^{a_1} + ... + x_k^{a_k}.
struct BrieskornPham {
  std::vector<int> exponents;
};

/// Quasihomogeneous isolated germ with the given weights in (0,1).
struct Quasihomogeneous {
  std::vector<Rational> weights;
};

/// A germ given directly by its spectral pairs.
struct ExplicitSpp {
  SppSet pairs;
  int variables = 0;
};

/// g(x) + h(y) in disjoint sets of variables.
struct Join {
  std::shared_ptr<const LocalModel> left;
  std::shared_ptr<const LocalModel> right;
};

/// Isolated hypersurface singularity germ.
class LocalModel {
 public:
  using Variant = std::variant<BrieskornPham, Quasihomogeneous, ExplicitSpp, Join>;

  LocalModel(BrieskornPham m) : model_(std::move(m)) {}     // NOLINT(implicit)
  LocalModel(Quasihomogeneous m) : model_(std::move(m)) {}  // NOLINT(implicit)
  LocalModel(ExplicitSpp m) : model_(std::move(m)) {}       // NOLINT(implicit)
  LocalModel(Join m) : model_(std::move(m)) {}              // NOLINT(implicit)

  static LocalModel join(LocalModel left, LocalModel right) {
    return Join{std::make_shared<const LocalModel>(std::move(left)),
                std::make_shared<const LocalModel>(std::move(right))};
  }

  const Variant& variant() const { return model_; }

  int variables() const {
    struct Visitor {
      int operator()(const BrieskornPham& m) const { return static_cast<int>(m.exponents.size()); }
      int operator()(const Quasihomogeneous& m) const { return static_cast<int>(m.weights.size()); }
      int operator()(const ExplicitSpp& m) const { return m.variables; }
      int operator()(const Join& m) const { return m.left->variables() + m.right->variables(); }
    };
    return std::visit(Visitor{}, model_);
  }

 private:
  Variant model_;
};

/// Spectral pairs of the vanishing cohomology H^{k-1}(F) of a germ in k
/// variables.
struct LocalSpectrum {
  SppSet pairs;
  int variables = 0;
  std::int64_t milnor_number = 0;

  int level() const { return variables - 1; }
  friend bool operator==(const LocalSpectrum&, const LocalSpectrum&) = default;
};

/// The germ g + x^d split into the eigenspaces of the Galois action
/// x -> e(1/d) x. Sector s holds the character e(s/d).
struct GradedLocalData {
  int d = 0;
  int variables = 0;  // of the suspended germ
  std::map<int, SppSet> sectors;

  LocalSpectrum sector_spectrum(int s) const {
    const SppSet& pairs = sectors.at(s);
    return {pairs, variables, pairs.total()};
  }
};

namespace detail {

inline void check_spectrum_range(const LocalSpectrum& spec) {
  for (const auto& [pair, mult] : spec.pairs) {
    if (pair.alpha <= Rational(-1) || pair.alpha >= Rational(spec.variables - 1))
      throw NonIsolated("spectral number " + pair.alpha.str() + " outside (-1, " +
                        std::to_string(spec.variables - 1) + ")");
  }
}

/// Coefficients of prod_i (t^{e_i} - t^D) / (1 - t^{e_i}) as an integer
/// polynomial; throws NonIsolated if the quotient is not a polynomial with
/// non-negative coefficients.
inline std::vector<std::int64_t> quasihomogeneous_series(const std::vector<std::int64_t>& e, std::int64_t D) {
  std::vector<std::int64_t> poly{1};
  for (std::int64_t ei : e) {
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(D), 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + static_cast<std::size_t>(ei)] += poly[j];
      next[j + static_cast<std::size_t>(D)] -= poly[j];
    }
    poly = std::move(next);
  }
  for (std::int64_t ei : e) {
    const auto step = static_cast<std::size_t>(ei);
    if (poly.size() <= step) throw NonIsolated("quasihomogeneous weights do not give a finite Milnor algebra");
    // divide by (1 - t^e): q_j = n_j + q_{j-e}
    std::vector<std::int64_t> quot(poly.size() - step, 0);
    for (std::size_t j = 0; j < quot.size(); ++j) quot[j] = poly[j] + (j >= step ? quot[j - step] : 0);
    for (std::size_t j = quot.size(); j < poly.size(); ++j) {
      const std::int64_t back = j >= step ? quot[j - step] : 0;
      if (poly[j] != -back) throw NonIsolated("quasihomogeneous weights do not give a finite Milnor algebra");
    }
    poly = std::move(quot);
  }
  for (std::int64_t c : poly)
    if (c < 0) throw NonIsolated("quasihomogeneous weights do not give a finite Milnor algebra");
  return poly;
}

}  // namespace detail

/// Spectral pairs of a local model.
///
/// Brieskorn-Pham and quasihomogeneous germs are pure: every pair carries
/// omega = k - 1.
inline LocalSpectrum local_spectral_pairs(const LocalModel& model) {
  struct Visitor {
    LocalSpectrum operator()(const BrieskornPham& m) const {
      const int k = static_cast<int>(m.exponents.size());
      if (k == 0) throw NonIsolated("Brieskorn-Pham germ needs at least one exponent");
      for (int a : m.exponents)
        if (a < 2) throw NonIsolated("Brieskorn-Pham exponent " + std::to_string(a) + " < 2");
      SppSet pairs;
      std::vector<int> l(k, 0);
      while (true) {
        Rational alpha(-1);
        for (int i = 0; i < k; ++i) alpha += Rational(BigInt(l[i] + 1), BigInt(m.exponents[i]));
        pairs.add({alpha, k - 1});
        int i = 0;
        while (i < k && ++l[i] > m.exponents[i] - 2) l[i++] = 0;
        if (i == k) break;
      }
      return {pairs, k, pairs.total()};
    }

    LocalSpectrum operator()(const Quasihomogeneous& m) const {
      const int k = static_cast<int>(m.weights.size());
      if (k == 0) throw NonIsolated("quasihomogeneous germ needs at least one weight");
      BigInt D = 1;
      Rational mu(1);
      for (const Rational& w : m.weights) {
        if (w <= Rational(0) || w >= Rational(1))
          throw NonIsolated("quasihomogeneous weight " + w.str() + " outside (0,1)");
        D = boost::multiprecision::lcm(D, w.den());
        mu *= Rational(1) / w - Rational(1);
      }
      if (!mu.is_integer() || mu <= Rational(0))
        throw NonIsolated("Milnor number prod(1/w - 1) = " + mu.str() + " is not a positive integer");
      std::vector<std::int64_t> e;
      for (const Rational& w : m.weights) e.push_back((w * Rational(D)).to_int());
      const auto Di = Rational(D).to_int();
      const auto series = detail::quasihomogeneous_series(e, Di);
      SppSet pairs;
      for (std::size_t j = 0; j < series.size(); ++j)
        if (series[j] != 0)
          pairs.add({Rational(BigInt(static_cast<std::int64_t>(j)), D) - Rational(1), k - 1}, series[j]);
      if (pairs.total() != mu.to_int()) throw NonIsolated("quasihomogeneous spectrum size differs from mu");
      return {pairs, k, pairs.total()};
    }

    LocalSpectrum operator()(const ExplicitSpp& m) const {
      if (m.variables < 1) throw NonIsolated("explicit spectrum needs at least one variable");
      if (!m.pairs.is_final()) throw NonIsolated("explicit spectrum has negative entries");
      for (const auto& [pair, mult] : m.pairs)
        if (pair.omega > m.variables)
          throw NonIsolated("explicit spectrum weight " + std::to_string(pair.omega) + " exceeds variable count");
      return {m.pairs, m.variables, m.pairs.total()};
    }

    LocalSpectrum operator()(const Join& m) const {
      LocalSpectrum a = local_spectral_pairs(*m.left);
      LocalSpectrum b = local_spectral_pairs(*m.right);
      SppSet pairs = spp_join(a.pairs, b.pairs);
      return {pairs, a.variables + b.variables, pairs.total()};
    }
  };
  LocalSpectrum spec = std::visit(Visitor{}, model.variant());
  if (spec.milnor_number <= 0) throw NonIsolated("germ has zero Milnor number");
  detail::check_spectrum_range(spec);
  return spec;
}

/// d-th suspension g + x^d graded by the Galois character: sector s is
/// Spp(g) * {(s/d - 1, 0)}.
inline GradedLocalData galois_suspension(const LocalSpectrum& spec, int d) {
  if (d < 2) throw DegreeTooSmall("galois_suspension: degree must be >= 2");
  GradedLocalData out{d, spec.variables + 1, {}};
  for (int s = 1; s < d; ++s) {
    SppSet factor{{SpectralPair{Rational(BigInt(s), BigInt(d)) - Rational(1), 0}, 1}};
    out.sectors.emplace(s, spp_join(spec.pairs, factor));
  }
  return out;
}

/// Primitive Hodge numbers of a germ: decode at level k - 1 and peel the
/// monodromy weight filtration (center k - 1, or k at eigenvalue 1).
inline HodgeTable local_primitive_table(const LocalSpectrum& spec) {
  return primitive_from_full(decode_spp(spec.pairs, spec.level()));
}

/// Eigenvalue != 1 part of the vanishing cohomology of the smoothing
/// g(y) + t y0 = y0^d, computed from the Hodge classes of g (in n variables).
/// The result is a full table at level n.
inline HodgeTable twisted_suspension(const LocalSpectrum& spec, int d) {
  if (d < 2) throw DegreeTooSmall("twisted_suspension: degree must be >= 2");
  const HodgeTable g = decode_spp(spec.pairs, spec.level());
  HodgeTable out(TableKind::full, spec.variables);
  const Rational dm1(d - 1);
  for (const auto& [key, mult] : g) {
    const Rational& gamma = key.lambda.q();
    if (key.lambda.is_one()) {
      for (int k = 1; k <= d - 2; ++k) out.add(RootLabel(Rational(k) / dm1), key.p, key.q, mult);
    } else if ((gamma * Rational(d)).is_integer()) {
      const int i = (gamma * Rational(d)).to_int();
      for (int k = 0; k <= d - 2; ++k) {
        if (k == d - 1 - i) continue;
        const Rational e = Rational(k + i) / dm1;
        const int shift = static_cast<int>(e.floor_int());
        out.add(RootLabel(e), key.p + shift, key.q + 1 - shift, mult);
      }
    } else {
      for (int k = 0; k <= d - 2; ++k) {
        const Rational e = gamma + (Rational(k) + gamma) / dm1;
        const int shift = static_cast<int>(e.floor_int());
        out.add(RootLabel(e), key.p + shift, key.q + 1 - shift, mult);
      }
    }
  }
  return out;
}

/// Primitive numbers of g'' = g + x^d + y^d, sector xi = e(s/d) of the y-action,
/// assembled from g and the sectors of g' = g + x^d:
///   p^{p+1,q+1}(g'')_xi = sum_{0<t<d, t+s != d} p^{p+c, q+1-c}(g')_{e((t+s)/d)} + p^{p,q}(g),
/// with c = [(t+s)/d].
inline std::map<int, HodgeTable> double_suspension_primitives(const HodgeTable& g_primitives,
                                                              const GradedLocalData& g_sus, int d) {
  if (d < 2) throw DegreeTooSmall("double_suspension_primitives: degree must be >= 2");
  if (g_primitives.kind() != TableKind::primitive)
    throw ValidationError("double_suspension_primitives expects a primitive table for g");
  const int level = g_primitives.level() + 2;
  std::map<int, HodgeTable> sector_primitives;
  for (const auto& [t, pairs] : g_sus.sectors)
    sector_primitives.emplace(t, local_primitive_table(g_sus.sector_spectrum(t)));

  std::map<int, HodgeTable> out;
  for (int s = 1; s < d; ++s) {
    HodgeTable table(TableKind::primitive, level);
    for (const auto& [key, mult] : g_primitives) table.add(key.lambda, key.p + 1, key.q + 1, mult);
    for (int t = 1; t < d; ++t) {
      if (t + s == d) continue;
      const int c = (t + s) / d;
      const int sector = (t + s) % d;
      auto it = sector_primitives.find(sector);
      if (it == sector_primitives.end()) continue;
      for (const auto& [key, mult] : it->second) table.add(key.lambda, key.p - c + 1, key.q + c, mult);
    }
    out.emplace(s, std::move(table));
  }
  return out;
}

}  // namespace hodgeinf
