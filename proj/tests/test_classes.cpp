#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rankproj/classes.hpp"
#include "rankproj/errors.hpp"

using namespace rankproj;

TEST_CASE("block shapes normalize and transpose") {
  CHECK(BlockShape::col(1) == BlockShape::row(1));
  CHECK(BlockShape::row(3).transposed() == BlockShape::col(3));
  CHECK(BlockShape::corner().transposed() == BlockShape::corner());
  CHECK(BlockShape::square().cell_count() == 4);
  CHECK(BlockShape::col(2).row_count() == 2);
  CHECK(BlockShape::row(3).to_string() == "Row(3)");
  CHECK(BlockShape::col(2).to_string() == "Col(2)");
  CHECK(BlockShape::corner().to_string() == "Corner");
  CHECK_THROWS_AS(BlockShape::row(0), PreconditionError);
}

TEST_CASE("hyperplane and 3h^2 classes on P^2") {
  const auto ctx = GrassmannContext::for_rank(3, 1);  // G(2,3)
  CHECK(sigma_row(ctx, 2).value.to_string() == "σ[1]");
  CHECK(sigma_col(ctx, 2).value.to_string() == "3·σ[1,1]");
  const std::vector<BlockShape> none;
  CHECK(grassmann_class(ctx, none).value.is_zero());
}

TEST_CASE("single cell: row and column formulas agree") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto ctx = GrassmannContext::make(k, n);
      CHECK(sigma_row(ctx, 1).value == sigma_col(ctx, 1).value);
    }
  }
}

TEST_CASE("corner class at k = 1 vanishes in degree") {
  // On G(1,3) the corner contributes 1 - Sigma = c^{-3} up to the top degree.
  const auto ctx = GrassmannContext::for_rank(3, 2);
  const std::vector<BlockShape> shapes = {BlockShape::corner()};
  auto one_minus = one_minus_sigma_blocks(ctx, shapes);
  CHECK(integral(mul(total_s_power(ctx, 3), one_minus)) == 0);
}

TEST_CASE("block product is commutative and memoized") {
  const auto ctx = GrassmannContext::make(3, 7);
  const std::vector<BlockShape> a = {BlockShape::corner(), BlockShape::row(2), BlockShape::square()};
  const std::vector<BlockShape> b = {BlockShape::square(), BlockShape::corner(), BlockShape::row(2)};
  CHECK(one_minus_sigma_blocks(ctx, a) == one_minus_sigma_blocks(ctx, b));
  auto first = sigma_block(ctx, BlockShape::square());
  auto second = sigma_block(ctx, BlockShape::square());
  CHECK(first.value == second.value);
  CHECK(!first.provenance.empty());
}

TEST_CASE("Sigma has no constant term when the block fits in k lines") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto ctx = GrassmannContext::make(k, n);
      for (auto s : {BlockShape::row(1), BlockShape::row(2), BlockShape::col(2), BlockShape::corner(),
                     BlockShape::square()}) {
        if (std::max(s.row_count(), s.col_count()) > k) continue;
        CHECK(sigma_block(ctx, s).value.constant_term() == 0);
      }
    }
  }
}
