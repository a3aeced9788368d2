#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankproj/degrees.hpp"
#include "rankproj/errors.hpp"

using namespace rankproj;

TEST_CASE("empty pattern gives the rank-locus degree") {
  const std::vector<BlockShape> none;
  for (int n = 1; n <= 8; ++n) {
    for (int r = 1; r <= n; ++r) CHECK(degree_from_blocks(n, r, none) == deg_sigma(n, n - r));
  }
  CHECK(degree_from_blocks(7, 1, none) == 924);
}

TEST_CASE("single row published table") {
  const long expected[] = {896, 15582, 11172, 490, 0, 0, 0};
  for (int r = 1; r <= 7; ++r) CHECK(d_onerow(7, r, 3) == expected[r - 1]);
}

TEST_CASE("closed single-row form") {
  CHECK(d_onerow_closed(4, 1, 1) == 19);
  for (int n = 2; n <= 8; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int l = 0; l <= n - r; ++l) CHECK(d_onerow(n, r, l) == d_onerow_closed(n, r, l));
    }
  }
  CHECK_THROWS_AS(d_onerow_closed(5, 3, 3), PreconditionError);
}

TEST_CASE("row/column duality") {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int l = 1; l <= n; ++l) CHECK(d_onerow(n, r, l) == d_onecol(n, r, l));
    }
  }
  CHECK(d_onecol(3, 1, 2) == 3);
}

TEST_CASE("diagonal closed form") {
  CHECK(d_diag(4, 2, 4) == 2);
  CHECK(d_diag(9, 6, 9) == 42);
  CHECK(d_diag(1, 0, 1) == 1);
  CHECK(d_diag(16, 12, 16) == 24024);
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        std::vector<int> ones(static_cast<std::size_t>(s), 1);
        CHECK(d_diag(n, r, s) == d_rows(n, r, ones));
      }
    }
  }
  CHECK_THROWS_AS(d_diag(4, 2, 5), PreconditionError);
}

TEST_CASE("mixed rows and columns") {
  const std::vector<int> two_two = {2, 2};
  const long expected[] = {228, 734, 8, 0, 0, 0};
  for (int r = 1; r <= 6; ++r) CHECK(d_mix(6, r, two_two, two_two) == expected[r - 1]);
}

TEST_CASE("corners closed form matches the block product") {
  for (int n = 2; n <= 7; ++n) {
    for (int g = 0; 2 * g <= n && g <= 3; ++g) {
      std::vector<BlockShape> shapes(static_cast<std::size_t>(g), BlockShape::corner());
      for (int r = 1; r <= n; ++r) CHECK(d_corners(n, r, g) == degree_from_blocks(n, r, shapes));
    }
  }
  CHECK(d_corners(7, 2, 3) == 13395);
}

TEST_CASE("Schubert identity") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= 3 && k < n; ++k) {
      for (int i = 0; i <= n - 1 - k; ++i) {
        BigRational rhs = schubert_identity_rhs(k, n, i);
        CHECK(rhs.get_den() == 1);
        CHECK(schubert_identity_lhs(k, n, i) == rhs.get_num());
      }
    }
  }
  CHECK(schubert_identity_lhs(2, 5, 7) == 0);
}

TEST_CASE("serial and parallel tables agree") {
  const std::vector<BlockShape> shapes = {BlockShape::corner(), BlockShape::row(2),
                                          BlockShape::col(2)};
  for (int n = 7; n <= 9; ++n) {
    auto a = degree_table(n, shapes, Execution::Serial);
    auto b = degree_table(n, shapes, Execution::Parallel);
    CHECK(a.degrees == b.degrees);
  }
}

TEST_CASE("preconditions") {
  const std::vector<BlockShape> none;
  CHECK_THROWS_AS(degree_from_blocks(5, 0, none), PreconditionError);
  CHECK_THROWS_AS(degree_from_blocks(5, 6, none), PreconditionError);
  CHECK_THROWS_AS(d_corners(5, 2, 3), PreconditionError);
  const std::vector<int> too_many(4, 1);
  CHECK_THROWS_AS(d_rows(3, 1, too_many), PreconditionError);
}
