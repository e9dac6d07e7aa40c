#include "jsj/ext_nat.hpp"

#include <charconv>

#include "jsj/errors.hpp"

namespace jsj {

ExtNat& ExtNat::operator+=(ExtNat rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  if (value_ + rhs.value_ < value_) throw ResourceLimit("ExtNat overflow");
  value_ += rhs.value_;
  return *this;
}

std::string ExtNat::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::optional<ExtNat> ExtNat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return ExtNat(v);
}

std::ostream& operator<<(std::ostream& os, ExtNat x) { return os << x.to_string(); }

}  // namespace jsj
