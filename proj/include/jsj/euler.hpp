#pragma once

#include <cstdint>
#include <span>

#include "jsj/rational.hpp"

namespace jsj {

/// One cell of an orbifold cell structure together with the order of its
/// isotropy group.
struct OrbifoldCell {
  int dimension;               // 0, 1 or 2
  std::uint64_t isotropy_order;
};

/// Sum over cells of (-1)^dim / |isotropy|.
Rational orbifold_euler(std::span<const OrbifoldCell> cells);

/// Euler characteristic of an index-`index` subgroup.
Rational scale_chi(const Rational& chi, std::uint64_t index);

}  // namespace jsj
