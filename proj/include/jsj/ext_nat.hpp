#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace jsj {

/// A natural number or infinity. Infinity absorbs addition and sits above
/// every finite value.
class ExtNat {
public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtNat infinity() {
    ExtNat x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

  /// Finite value; meaningless when infinite.
  constexpr std::uint64_t value() const { return value_; }

  ExtNat& operator+=(ExtNat rhs);
  friend ExtNat operator+(ExtNat lhs, ExtNat rhs) { return lhs += rhs; }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  /// "inf" or the decimal value.
  std::string to_string() const;
  static std::optional<ExtNat> parse(std::string_view text);

private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, ExtNat x);

}  // namespace jsj
