#include <chrono>
#include <map>

#include "rankproj/chow.hpp"
#include "rankproj/degrees.hpp"
#include "rankproj/errors.hpp"
#include "rankproj/verify.hpp"

namespace rankproj {

std::vector<CorpusPattern> pattern_corpus() {
  // name, cell list.  The last three are deliberately unsupported.
  static const std::vector<std::pair<const char*, const char*>> items = {
      {"empty", ""},
      {"cell", "1,1"},
      {"row2", "1,1;1,2"},
      {"row3", "1,1;1,2;1,3"},
      {"row4", "1,1;1,2;1,3;1,4"},
      {"col2", "1,1;2,1"},
      {"col3", "1,1;2,1;3,1"},
      {"col4", "1,1;2,1;3,1;4,1"},
      {"diag2", "1,1;2,2"},
      {"diag3", "1,1;2,2;3,3"},
      {"diag4", "1,1;2,2;3,3;4,4"},
      {"diag5", "1,1;2,2;3,3;4,4;5,5"},
      {"rows21", "1,1;1,2;2,3"},
      {"rows22", "1,1;1,2;2,3;2,4"},
      {"rows32", "1,1;1,2;1,3;2,4;2,5"},
      {"rows211", "1,1;1,2;2,3;3,4"},
      {"cols22", "1,1;2,1;3,2;4,2"},
      {"row2-col2", "1,1;1,2;2,3;3,3"},
      {"row2-col2-cell", "1,1;1,2;2,3;3,3;4,4"},
      {"corner", "1,1;1,2;2,1"},
      {"corner-b", "1,1;1,2;2,2"},
      {"corner-c", "1,2;2,1;2,2"},
      {"corner-d", "1,1;2,1;2,2"},
      {"corner-cell", "1,1;1,2;2,1;3,3"},
      {"corner-row2", "1,1;1,2;2,1;3,3;3,4"},
      {"corner-col2", "1,1;1,2;2,1;3,3;4,3"},
      {"two-corners", "1,1;1,2;2,1;3,3;3,4;4,3"},
      {"square", "1,1;1,2;2,1;2,2"},
      {"square-cell", "1,1;1,2;2,1;2,2;3,3"},
      {"square-row2", "1,1;1,2;2,1;2,2;3,3;3,4"},
      {"square-corner", "1,1;1,2;2,1;2,2;3,3;3,4;4,3"},
      {"spread-corner", "1,1;1,4;3,1"},
      {"spread-square", "2,2;2,5;5,2;5,5"},
      {"two-squares", "1,1;1,2;2,1;2,2;3,3;3,4;4,3;4,4"},
      {"scattered", "1,3;2,1;3,5;4,2"},
      {"square-col2-row2", "1,1;1,2;2,1;2,2;3,3;4,3;5,4;5,5"},
      {"zigzag", "1,1;1,2;2,2;2,3"},
      {"rect2x3", "1,1;1,2;1,3;2,1;2,2;2,3"},
      {"ell4", "1,1;1,2;1,3;2,1"},
  };
  std::vector<CorpusPattern> out;
  out.reserve(items.size());
  for (const auto& [name, cells] : items) out.push_back({name, parse_cells(cells)});
  return out;
}

namespace {

// Cell lists read off the published pictures.
constexpr const char* kLadder = "1,1;2,1;2,2;3,3;4,3;4,4;5,5;6,5;6,6";
constexpr const char* kMixed886 = "1,1;2,1;2,2;3,3;4,3;5,4;5,5;6,6;7,6;7,7";
constexpr const char* kMixed861 = "1,1;2,1;3,2;3,3;4,4;5,4;5,5;6,6;6,7;7,6;7,7";

void add_table(std::vector<GoldenValue>& out, const std::string& name, int n,
               const std::vector<BlockShape>& shapes, const std::vector<long>& expected) {
  for (int r = 1; r <= n; ++r) {
    out.push_back({name + " r=" + std::to_string(r), n,
                   [=] { return degree_from_blocks(n, r, shapes); },
                   BigInt(expected.at(static_cast<std::size_t>(r - 1)))});
  }
}

// Values of d_{n, n-k, S} for n = first, first+1, ...  The first terms of some
// published sequences sit at r = 0, where G(n, n) is a point; the context is
// built directly so those are evaluated too.
void add_corank_sequence(std::vector<GoldenValue>& out, const std::string& name, int k, int first,
                         const std::vector<BlockShape>& shapes, const std::vector<long>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const int n = first + static_cast<int>(i);
    out.push_back({name + " n=" + std::to_string(n), n,
                   [=] { return degree_from_blocks(GrassmannContext::make(k, n), shapes); },
                   BigInt(expected[i])});
  }
}

std::vector<BlockShape> shapes_of(const char* cells) { return block_shapes(parse_cells(cells)); }

}  // namespace

std::vector<GoldenValue> golden_values() {
  using S = BlockShape;
  std::vector<GoldenValue> g;

  add_table(g, "row 3, n=7", 7, {S::row(3)}, {896, 15582, 11172, 490, 0, 0, 0});
  add_table(g, "rows 3,2,1,1, n=7", 7, {S::row(3), S::row(2), S::row(1), S::row(1)},
            {887, 13957, 5990, 35, 0, 0, 0});
  add_table(g, "corner, n=7", 7, {S::corner()}, {912, 17303, 15218, 1001, 6, 0, 0});
  add_table(g, "corner, n=8", 8, {S::corner()}, {3418, 217007, 592956, 118188, 2548, 7, 0, 0});
  add_table(g, "three corners, n=7", 7, shapes_of(kLadder), {888, 13395, 4078, 2, 0, 0, 0});
  add_table(g, "square, n=7", 7, {S::square()}, {887, 14701, 9478, 371, 1, 0, 0});
  add_table(g, "corner+col2+row2+corner, n=7", 7, shapes_of(kMixed886),
            {886, 12967, 3102, 0, 0, 0, 0});
  add_table(g, "col2+row2+corner+square, n=7", 7, shapes_of(kMixed861),
            {861, 10701, 1424, 0, 0, 0, 0});

  const std::vector<int> mixed = {2, 2};
  for (int r = 1; r <= 6; ++r) {
    static const long expected[] = {228, 734, 8, 0, 0, 0};
    g.push_back({"rows 2,2 cols 2,2, n=6 r=" + std::to_string(r), 6,
                 [=] { return d_mix(6, r, mixed, mixed); }, BigInt(expected[r - 1])});
  }

  g.push_back({"diagonal n=4 r=2 s=4", 4, [] { return d_diag(4, 2, 4); }, BigInt(2)});
  g.push_back({"diagonal n=9 r=6 s=9", 9, [] { return d_diag(9, 6, 9); }, BigInt(42)});
  const long maxdia[] = {1, 2, 42, 24024, 701149020};
  for (int k = 1; k <= 5; ++k) {
    const int n = k * k;
    g.push_back({"maximal diagonal k=" + std::to_string(k), n,
                 [=] { return d_diag(n, n - k, n); }, BigInt(maxdia[k - 1])});
  }

  // Two-row benzenoid strip: empty pattern at corank 2, single cell at corank 3.
  const std::vector<long> b2 = {6, 20, 50, 105, 196, 336, 540, 825, 1210, 1716};
  const std::vector<long> b3 = {19, 155, 805, 3136, 9996, 27468, 67320, 150645, 313027, 611611};
  for (int a = 1; a <= 10; ++a) {
    g.push_back({"corank 2 empty, a=" + std::to_string(a), a + 2,
                 [=] { return degree_from_blocks(a + 2, a, std::vector<BlockShape>{}); },
                 BigInt(b2[static_cast<std::size_t>(a - 1)])});
    g.push_back({"corank 3 one cell, a=" + std::to_string(a), a + 3,
                 [=] { return d_onerow(a + 3, a, 1); },
                 BigInt(b3[static_cast<std::size_t>(a - 1)])});
  }

  const std::vector<std::vector<long>> corank3_rows = {
      {1, 20, 175, 980, 4116, 14112, 41580, 108900},
      {1, 19, 155, 805, 3136, 9996, 27468, 67320},
      {1, 16, 110, 490, 1666, 4704, 11592, 25740},
      {1, 10, 50, 175, 490, 1176, 2520, 4950},
  };
  for (int l = 0; l <= 3; ++l) {
    std::vector<BlockShape> shapes;
    if (l > 0) shapes.push_back(S::row(l));
    add_corank_sequence(g, "corank 3, row " + std::to_string(l), 3, 3, shapes,
                        corank3_rows[static_cast<std::size_t>(l)]);
  }

  add_corank_sequence(g, "corank 3, five diagonal cells", 3, 5,
                      std::vector<BlockShape>(5, S::row(1)), {85, 295, 771, 1681, 3235, 5685, 9325});
  add_corank_sequence(g, "corank 3, rows 2,3", 3, 5, {S::row(2), S::row(3)},
                      {25, 65, 140, 266, 462, 750, 1155});
  add_corank_sequence(g, "corank 3, row 2 col 2", 3, 4, {S::row(2), S::col(2)},
                      {12, 60, 200, 525, 1176, 2352, 4320});
  add_corank_sequence(g, "corank 3, row 2 col 3", 3, 4, {S::row(2), S::col(3)},
                      {6, 20, 50, 105, 196, 336, 540});
  add_corank_sequence(g, "corank 3, corner", 3, 3, {S::corner()},
                      {1, 14, 84, 330, 1001, 2548, 5712});
  add_corank_sequence(g, "corank 3, square", 3, 3, {S::square()},
                      {1, 10, 46, 146, 371, 812, 1596, 2892});
  add_corank_sequence(g, "corank 4, three squares", 4, 6,
                      {S::square(), S::square(), S::square()}, {105, 336, 825, 1716, 3185, 5440});
  return g;
}

CheckResult golden_check(int max_n) {
  CheckResult result;
  result.name = "published values";
  int skipped = 0;
  for (const auto& value : golden_values()) {
    if (value.n > max_n) {
      ++skipped;
      continue;
    }
    ++result.cases;
    BigInt got = value.compute();
    if (got != value.expected) {
      result.status = CheckResult::Status::Fail;
      result.counterexamples.push_back(value.name + ": got " + to_decimal(got) + ", expected " +
                                       to_decimal(value.expected));
    }
  }
  result.detail = "n <= " + std::to_string(max_n) + ", " + std::to_string(skipped) +
                  " larger values left to the acceptance run";
  return result;
}

std::vector<CheckResult> observed_checks() {
  std::vector<CheckResult> out;

  CheckResult corner;
  corner.name = "observed: corner at corank 2 gives n-1";
  corner.status = CheckResult::Status::Info;
  const std::vector<BlockShape> shapes = {BlockShape::corner()};
  for (int n = 3; n <= 9; ++n) {
    ++corner.cases;
    BigInt d = degree_from_blocks(n, n - 2, shapes);
    if (d != n - 1) {
      corner.counterexamples.push_back("n=" + std::to_string(n) + ": " + to_decimal(d));
    }
  }
  corner.detail = corner.counterexamples.empty() ? "holds for 3 <= n <= 9" : "does not hold";
  out.push_back(std::move(corner));

  CheckResult diag;
  diag.name = "observed: maximal diagonal degree independent of n";
  diag.status = CheckResult::Status::Info;
  for (int k = 1; k <= 3; ++k) {
    const int s = k * k;
    ++diag.cases;
    BigInt a = d_diag(s, s - k, s);
    BigInt b = d_diag(s + 1, s + 1 - k, s);
    if (a != b) {
      diag.counterexamples.push_back("k=" + std::to_string(k) + ": n=" + std::to_string(s) +
                                     " gives " + to_decimal(a) + ", n=" + std::to_string(s + 1) +
                                     " gives " + to_decimal(b));
    }
  }
  diag.detail = diag.counterexamples.empty() ? "holds for k <= 3 at n = k^2 and k^2+1"
                                             : "differs at some k";
  out.push_back(std::move(diag));
  return out;
}

}  // namespace rankproj
