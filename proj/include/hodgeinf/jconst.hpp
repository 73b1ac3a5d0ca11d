#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hodgeinf/errors.hpp"

namespace hodgeinf {

/// Index of a universal constant: dim of the degree (k+1)d - (n+1) - s piece
/// of the Jacobian ring of a smooth degree-d form in n+1 variables.
struct JConstantKey {
  int n = 1;
  int d = 2;
  int k = 0;
  int s = 0;

  void validate() const {
    if (n < 1) throw ValidationError("j-constant: n must be >= 1");
    if (d < 2) throw ValidationError("j-constant: d must be >= 2");
    if (k < 0) throw ValidationError("j-constant: k must be >= 0");
    if (s < 0 || s >= d) throw ValidationError("j-constant: s must satisfy 0 <= s < d");
  }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(k + 1) * d - (n + 1) - s;
  }
};

namespace detail {
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t b = 1;
  for (std::int64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}
}  // namespace detail

/// Coefficient of t^l in ((1 - t^{d-1}) / (1 - t))^{n+1}:
///   sum_i (-1)^i C(n+1, i) C(l - i(d-1) + n, n).
inline std::int64_t jacobian_hilbert_coefficient(int n, int d, std::int64_t l) {
  if (n < 1 || d < 2) throw ValidationError("jacobian_hilbert_coefficient: need n >= 1, d >= 2");
  if (l < 0) return 0;
  std::int64_t c = 0;
  for (std::int64_t i = 0; i <= n + 1 && i * (d - 1) <= l; ++i) {
    const std::int64_t term = detail::binomial(n + 1, i) * detail::binomial(l - i * (d - 1) + n, n);
    c += (i % 2 == 0) ? term : -term;
  }
  return c;
}

/// Hilbert series of a smooth Jacobian ring; entry l is the dimension of the
/// degree-l piece, l = 0 .. (n+1)(d-2).
inline std::vector<std::int64_t> jacobian_hilbert_series(int n, int d) {
  if (n < 1 || d < 2) throw ValidationError("jacobian_hilbert_series: need n >= 1, d >= 2");
  std::vector<std::int64_t> series;
  for (std::int64_t l = 0; l <= static_cast<std::int64_t>(n + 1) * (d - 2); ++l)
    series.push_back(jacobian_hilbert_coefficient(n, d, l));
  return series;
}

inline std::int64_t j_constant(const JConstantKey& key) {
  key.validate();
  return jacobian_hilbert_coefficient(key.n, key.d, key.degree());
}

inline std::int64_t j_constant(int n, int d, int k, int s) { return j_constant(JConstantKey{n, d, k, s}); }

/// Brute-force count of monomials z^v in n+1 variables with 0 <= v_i <= d-2
/// and |v| = l: the monomial basis of the Fermat Jacobian ring
/// C[z]/(z_i^{d-1}) in degree l.
inline std::int64_t fermat_oracle(int n, int d, std::int64_t l) {
  if (n < 1 || d < 2) throw ValidationError("fermat_oracle: need n >= 1, d >= 2");
  std::int64_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    std::int64_t sum = 0;
    for (int x : v) sum += x;
    if (sum == l) ++count;
    std::size_t i = 0;
    while (i < v.size() && ++v[i] > d - 2) v[i++] = 0;
    if (i == v.size()) break;
  }
  return count;
}

}  // namespace hodgeinf
