#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankproj/degrees.hpp"
#include "rankproj/oracle.hpp"
#include "rankproj/verify.hpp"

using namespace rankproj;
using oracle::SpecialPolynomial;

TEST_CASE("classical integrals") {
  const auto g24 = GrassmannContext::make(2, 4);
  auto s1 = SpecialPolynomial::s(g24, 1);
  CHECK(oracle::oracle_integral(g24, s1 * s1 * s1 * s1) == 2);
  for (int m = 1; m <= 6; ++m) {
    const auto ctx = GrassmannContext::make(1, m);
    auto p = SpecialPolynomial::constant(1);
    for (int i = 0; i < m - 1; ++i) p = p * SpecialPolynomial::s(ctx, 1);
    CHECK(oracle::oracle_integral(ctx, p) == 1);
  }
  const auto g23 = GrassmannContext::make(2, 3);
  auto c = oracle::total_s_polynomial(g23);
  CHECK(oracle::oracle_integral(g23, c * c * c) == 6);
}

TEST_CASE("integral of 1") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto ctx = GrassmannContext::make(k, n);
      const bool point = k * (n - k) == 0;
      CHECK(oracle::oracle_integral(ctx, SpecialPolynomial::constant(1)) == (point ? 1 : 0));
    }
  }
}

TEST_CASE("out-of-range symbols are zero") {
  const auto ctx = GrassmannContext::make(2, 4);
  CHECK(SpecialPolynomial::s(ctx, 3).is_zero());
  CHECK(SpecialPolynomial::q(ctx, 3).is_zero());
  CHECK(SpecialPolynomial::s(ctx, 0).terms().size() == 1);
}

TEST_CASE("oracle degrees") {
  const std::vector<BlockShape> row3 = {BlockShape::row(3)};
  CHECK(oracle::oracle_degree(7, 3, row3) == 11172);
  const std::vector<BlockShape> mixed = {BlockShape::row(2), BlockShape::row(2), BlockShape::col(2),
                                         BlockShape::col(2)};
  CHECK(oracle::oracle_degree(6, 3, mixed) == 8);
  const std::vector<BlockShape> corner = {BlockShape::corner()};
  CHECK(oracle::oracle_degree(3, 2, corner) == 0);
}

TEST_CASE("oracle agrees with the engine on every supported shape") {
  const std::vector<BlockShape> shapes = {BlockShape::row(1), BlockShape::row(2), BlockShape::col(3),
                                          BlockShape::corner(), BlockShape::square()};
  for (int n = 2; n <= 6; ++n) {
    for (const auto& s : shapes) {
      if (s.row_count() > n || s.col_count() > n) continue;
      const std::vector<BlockShape> one = {s};
      for (int r = 1; r <= n; ++r) {
        CHECK(oracle::oracle_degree(n, r, one) == degree_from_blocks(n, r, one));
      }
    }
  }
}

TEST_CASE("cross-check report") {
  auto report = cross_check(4);
  CHECK(report.passed());
  CHECK(report.failures() == 0);
  bool noticed = false;
  for (const auto& c : report.checks) {
    for (const auto& n : c.notices) noticed |= n.find("zigzag") != std::string::npos;
  }
  CHECK(noticed);
  CHECK(pattern_corpus().size() >= 30);
  const auto text = report.to_text();
  CHECK(text.find("PASS: ") != std::string::npos);
  const auto json = report.to_json();
  CHECK(json.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("golden values for small n") {
  auto g = golden_check(5);
  CHECK(g.status == CheckResult::Status::Pass);
  CHECK(g.cases > 0);
}

TEST_CASE("failures are reported as data") {
  CheckResult bad;
  bad.name = "synthetic";
  bad.status = CheckResult::Status::Fail;
  bad.counterexamples.push_back("n=1");
  Report r;
  r.checks.push_back(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.to_text().find("counterexample: n=1") != std::string::npos);
}
