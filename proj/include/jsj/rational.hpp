#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace jsj {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& r) { v_ += r.v_; return *this; }
  Rational& operator-=(const Rational& r) { v_ -= r.v_; return *this; }
  Rational& operator*=(const Rational& r) { v_ *= r.v_; return *this; }
  Rational& operator/=(const Rational& r);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p" or "p/q" with optional leading '-'; rejects q = 0.
  static std::optional<Rational> parse(std::string_view text);

private:
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace jsj
