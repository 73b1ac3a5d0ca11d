#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hodgeinf/errors.hpp"

namespace hodgeinf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long long>(n)) {}  // NOLINT(implicit)

  explicit Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "a", "-a", "a/b" (whitespace around the slash is not allowed).
  static Rational parse(std::string_view text) {
    auto bad = [&] {
      return ParseError("malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    auto parse_int = [&](std::string_view s) -> BigInt {
      std::size_t i = 0;
      bool negative = false;
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) throw bad();
      BigInt v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw bad();
        v = v * 10 + (s[i] - '0');
      }
      return negative ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return value_ == 0; }

  /// Integer part [x]: the largest integer <= x.
  BigInt floor() const {
    BigInt n = num(), d = den();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
  }

  BigInt ceil() const {
    BigInt f = floor();
    return is_integer() ? f : BigInt(f + 1);
  }

  /// Fractional part {x} = x - [x], in [0,1).
  Rational frac() const { return *this - Rational(floor()); }

  /// Representative of x modulo m in [0, m), m > 0.
  Rational mod(const Rational& m) const {
    Rational q = *this / m;
    return *this - m * Rational(q.floor());
  }

  std::int64_t floor_int() const { return narrow(floor()); }
  std::int64_t ceil_int() const { return narrow(ceil()); }

  /// Value as a machine integer; throws if not integral or out of range.
  std::int64_t to_int() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return narrow(num());
  }

  std::string str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
  }

  Rational operator-() const { return Rational(Raw{}, -value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct Raw {};
  Rational(Raw, boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  static std::int64_t narrow(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("Rational: integer part out of 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  boost::multiprecision::cpp_rational value_{0};
};

/// A root of unity e(q) = exp(2 pi i q), stored by its label q in [0,1).
///
/// Formulas written with xi = e(-beta) use beta(), which is (1 - q) mod 1.
class RootLabel {
 public:
  RootLabel() = default;
  explicit RootLabel(const Rational& q) : q_(q.mod(1)) {}

  /// The root e(-beta).
  static RootLabel from_negative_exponent(const Rational& beta) { return RootLabel(-beta); }
  static RootLabel one() { return RootLabel(); }

  const Rational& q() const { return q_; }
  bool is_one() const { return q_.is_zero(); }

  Rational beta() const { return (Rational(1) - q_).mod(1); }
  RootLabel conjugate() const { return RootLabel(-q_); }
  RootLabel power(std::int64_t k) const { return RootLabel(q_ * Rational(k)); }
  RootLabel operator*(const RootLabel& o) const { return RootLabel(q_ + o.q_); }

  /// True iff this root raised to the k-th power is 1.
  bool has_order_dividing(std::int64_t k) const { return power(k).is_one(); }

  std::string str() const { return is_one() ? "1" : "e(" + q_.str() + ")"; }
  /// Negative-convention spelling, e.g. e(1/6) prints as e(-5/6).
  std::string negative_str() const { return is_one() ? "1" : "e(-" + beta().str() + ")"; }

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
  friend std::strong_ordering operator<=>(const RootLabel& a, const RootLabel& b) { return a.q_ <=> b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const RootLabel& r) { return os << r.str(); }

 private:
  Rational q_{0};
};

}  // namespace hodgeinf
