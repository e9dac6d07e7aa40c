#include "jsj/euler.hpp"

#include "jsj/errors.hpp"

namespace jsj {

Rational orbifold_euler(std::span<const OrbifoldCell> cells) {
  if (cells.empty()) throw InvalidInput("orbifold cell list is empty");
  Rational chi;
  for (const auto& c : cells) {
    if (c.isotropy_order == 0) throw InvalidInput("isotropy order must be positive");
    if (c.dimension < 0 || c.dimension > 2) throw InvalidInput("cell dimension must be 0, 1 or 2");
    const Rational term(BigInt(1), BigInt(c.isotropy_order));
    if (c.dimension % 2 == 0)
      chi += term;
    else
      chi -= term;
  }
  return chi;
}

Rational scale_chi(const Rational& chi, std::uint64_t index) {
  if (index == 0) throw InvalidInput("subgroup index must be positive");
  return chi * Rational(BigInt(index), BigInt(1));
}

}  // namespace jsj
