#include "jsj/rational.hpp"

#include "jsj/errors.hpp"

namespace jsj {

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.v_ == 0) throw InvalidInput("division by zero");
  v_ /= r.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

namespace {

bool parse_int(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  bool neg = false;
  if (s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  if (neg) out = -out;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  BigInt num, den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    auto d = text.substr(slash + 1);
    if (!parse_int(text.substr(0, slash), num) || d.starts_with('-') || !parse_int(d, den))
      return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace jsj
