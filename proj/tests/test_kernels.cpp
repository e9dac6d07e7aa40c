#include <doctest.h>

#include "jsj/errors.hpp"
#include "jsj/kernels.hpp"
#include "support/generators.hpp"

using namespace jsj;
using jsj::testing::Rng;

TEST_CASE("iota_term") {
  CHECK(kernels::iota_term(VertexKind::Fuchsian, 2) == ExtNat::infinity());
  CHECK(kernels::iota_term(VertexKind::TwoEnded, 2) == ExtNat(2));
  CHECK(kernels::iota_term(VertexKind::Fuchsian, 0) == ExtNat(0));
}

TEST_CASE("block signatures: parallel matches serial") {
  Rng rng(2);
  // Large enough to take the threaded path.
  for (std::size_t n : {10u, 500u, 6000u}) {
    const auto g = testing::random_connected(rng, n, n / 2, 4);
    std::vector<std::size_t> block_of(g.vertex_count());
    for (auto& b : block_of) b = rng() % 7;
    CHECK(kernels::block_signatures_serial(g, block_of) == kernels::block_signatures_parallel(g, block_of));
  }
}

TEST_CASE("exact cover scan: parallel matches serial") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    kernels::CoverInstance inst;
    inst.surface_count = 1 + rng() % 14;
    const std::size_t curves = 1 + rng() % 5;
    for (std::size_t c = 0; c < curves; ++c) {
      auto& row = inst.curves.emplace_back();
      for (std::size_t s = 0; s < inst.surface_count; ++s)
        if (rng() % 3 == 0) row.emplace_back(s, 1 + rng() % 2);
    }
    const auto serial = kernels::exact_cover_subsets_serial(inst);
    CHECK(serial == kernels::exact_cover_subsets_parallel(inst));
    CHECK(std::is_sorted(serial.begin(), serial.end()));
  }
  kernels::CoverInstance too_big;
  too_big.surface_count = 64;
  CHECK_THROWS_AS(kernels::exact_cover_subsets_serial(too_big), ResourceLimit);
}
