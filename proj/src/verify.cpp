#include "rankproj/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rankproj/chow.hpp"
#include "rankproj/degrees.hpp"
#include "rankproj/errors.hpp"
#include "rankproj/oracle.hpp"

namespace rankproj {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (ok) return;
    result_.status = CheckResult::Status::Fail;
    if (result_.counterexamples.size() < kMaxCounterexamples) {
      result_.counterexamples.push_back(what());
    }
  }

  void notice(std::string text) { result_.notices.push_back(std::move(text)); }

  CheckResult finish(std::string detail) {
    result_.detail = std::move(detail);
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

std::string str(const BigInt& v) { return to_decimal(v); }

CheckResult whitney_check() {
  Checker c("whitney identity c(S^)c(Q^) = 1");
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto ctx = GrassmannContext::make(k, n);
      ChowElement prod = mul(total_s(ctx), total_q(ctx));
      c.expect(prod == ChowElement::one(ctx), [&] {
        return "G(" + std::to_string(k) + "," + std::to_string(n) + "): " + prod.to_string();
      });
    }
  }
  return c.finish("0 <= k <= n <= 8");
}

CheckResult degree_consistency_check() {
  Checker c("deg sigma = integral c(S^)^n");
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto ctx = GrassmannContext::make(k, n);
      BigInt expected = deg_sigma(n, k);
      BigInt by_strips = integral(total_s_power(ctx, n));
      BigInt by_mul = integral(power(total_s(ctx), n));
      c.expect(by_strips == expected && by_mul == expected, [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": product " + str(expected) +
               ", strips " + str(by_strips) + ", mul " + str(by_mul);
      });
    }
  }
  return c.finish("1 <= k <= n <= 8, both via strips and via general multiplication");
}

// Monomials of exact weight `weight` in s_1..s_k, q_1..q_{n-k}.
void special_monomials(const GrassmannContext& ctx, int weight, std::vector<std::vector<int>>& out,
                       std::vector<int>& cur, int min_code) {
  if (weight == 0) {
    out.push_back(cur);
    return;
  }
  // Codes: 1..k are s_i, k+1..k+(n-k) are q_{code-k}.
  for (int code = min_code; code <= ctx.n; ++code) {
    int w = code <= ctx.k ? code : code - ctx.k;
    if (w > weight) continue;
    cur.push_back(code);
    special_monomials(ctx, weight - w, out, cur, code);
    cur.pop_back();
  }
}

CheckResult oracle_integral_check() {
  Checker c("oracle integral = Schubert integral on special monomials");
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      const auto ctx = GrassmannContext::make(k, n);
      std::vector<std::vector<int>> monos;
      std::vector<int> cur;
      special_monomials(ctx, ctx.dimension(), monos, cur, 1);
      if (ctx.dimension() > 0) special_monomials(ctx, ctx.dimension() - 1, monos, cur, 1);
      for (const auto& m : monos) {
        ChowElement e = ChowElement::one(ctx);
        auto p = oracle::SpecialPolynomial::constant(1);
        for (int code : m) {
          if (code <= k) {
            e = mul(e, special_s(ctx, code));
            p = p * oracle::SpecialPolynomial::s(ctx, code);
          } else {
            e = mul(e, special_q(ctx, code - k));
            p = p * oracle::SpecialPolynomial::q(ctx, code - k);
          }
        }
        BigInt a = integral(e);
        BigInt b = oracle::oracle_integral(ctx, p);
        c.expect(a == b, [&] {
          return "G(" + std::to_string(k) + "," + std::to_string(n) + ") " + p.to_string() +
                 ": engine " + str(a) + ", oracle " + str(b);
        });
      }
    }
  }
  return c.finish("k <= 3, n <= 6, weights dim and dim-1");
}

CheckResult oracle_degree_check(int max_n) {
  Checker c("oracle degree = block degree on the corpus");
  int patterns = 0;
  for (const auto& item : pattern_corpus()) {
    if (item.pattern.max_coordinate() > max_n) continue;
    std::vector<BlockShape> shapes;
    try {
      shapes = block_shapes(item.pattern);
    } catch (const UnsupportedShape& e) {
      c.notice("skipped " + item.name + ": " + e.what());
      continue;
    }
    ++patterns;
    for (int n = std::max(1, item.pattern.max_coordinate()); n <= max_n; ++n) {
      for (int r = 1; r <= n; ++r) {
        BigInt a = degree_from_blocks(n, r, shapes);
        BigInt b = oracle::oracle_degree(n, r, shapes);
        c.expect(a == b, [&] {
          return item.name + " n=" + std::to_string(n) + " r=" + std::to_string(r) + ": engine " +
                 str(a) + ", oracle " + str(b);
        });
      }
    }
  }
  return c.finish(std::to_string(patterns) + " supported patterns, n <= " + std::to_string(max_n));
}

CheckResult onerow_closed_check() {
  Checker c("single row: integral = closed binomial form");
  for (int n = 2; n <= 8; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int l = 0; l <= n - r; ++l) {
        BigInt a = d_onerow(n, r, l);
        BigInt b = d_onerow_closed(n, r, l);
        c.expect(a == b, [&] {
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " l=" + std::to_string(l) +
                 ": " + str(a) + " vs " + str(b);
        });
      }
    }
  }
  return c.finish("2 <= n <= 8, l <= n-r");
}

CheckResult duality_check() {
  Checker c("row/column duality d_onerow = d_onecol");
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int l = 1; l <= n; ++l) {
        BigInt a = d_onerow(n, r, l);
        BigInt b = d_onecol(n, r, l);
        c.expect(a == b, [&] {
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " l=" + std::to_string(l) +
                 ": " + str(a) + " vs " + str(b);
        });
      }
    }
  }
  return c.finish("n <= 7, 1 <= l <= n");
}

CheckResult diag_check() {
  Checker c("diagonal closed form = unit rows");
  for (int n = 1; n <= 8; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        std::vector<int> ones(static_cast<std::size_t>(s), 1);
        BigInt a = d_diag(n, r, s);
        BigInt b = d_rows(n, r, ones);
        c.expect(a == b, [&] {
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                 ": " + str(a) + " vs " + str(b);
        });
      }
    }
  }
  return c.finish("s <= n <= 8");
}

CheckResult mix_check() {
  Checker c("mixed rows/columns = block product");
  const std::vector<std::vector<int>> row_lists = {{}, {1}, {2}, {3}, {2, 1}, {2, 2}, {3, 1}};
  const std::vector<std::vector<int>> col_lists = {{}, {2}, {3}, {2, 2}, {3, 2}};
  for (int n = 1; n <= 7; ++n) {
    for (const auto& rows : row_lists) {
      for (const auto& cols : col_lists) {
        std::vector<BlockShape> shapes;
        for (int l : rows) shapes.push_back(BlockShape::row(l));
        for (int m : cols) shapes.push_back(BlockShape::col(m));
        if (layout_blocks(shapes).max_coordinate() > n) continue;
        for (int r = 1; r <= n; ++r) {
          BigInt a = d_mix(n, r, rows, cols);
          BigInt b = degree_from_blocks(n, r, shapes);
          c.expect(a == b, [&] {
            return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + str(a) + " vs " +
                   str(b);
          });
        }
      }
    }
  }
  return c.finish("n <= 7, row lengths <= 3, column lengths <= 3");
}

CheckResult corners_check() {
  Checker c("many corners = block product");
  for (int n = 1; n <= 8; ++n) {
    for (int g = 0; g <= 3 && 2 * g <= n; ++g) {
      std::vector<BlockShape> shapes(static_cast<std::size_t>(g), BlockShape::corner());
      for (int r = 1; r <= n; ++r) {
        BigInt a = d_corners(n, r, g);
        BigInt b = degree_from_blocks(n, r, shapes);
        c.expect(a == b, [&] {
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " g=" + std::to_string(g) +
                 ": " + str(a) + " vs " + str(b);
        });
      }
    }
  }
  return c.finish("n <= 8, g <= 3");
}

CheckResult schubert_identity_check() {
  Checker c("Schubert identity on G(k,n-1)");
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= 3 && k <= n - 1; ++k) {
      for (int i = 0; i <= n - 1 - k; ++i) {
        BigInt lhs = schubert_identity_lhs(k, n, i);
        BigRational rhs = schubert_identity_rhs(k, n, i);
        c.expect(rhs.get_den() == 1 && rhs.get_num() == lhs, [&] {
          return "k=" + std::to_string(k) + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                 ": integral " + str(lhs) + ", product " + rhs.get_str();
        });
      }
    }
  }
  return c.finish("1 <= k <= 3, n <= 7, all i (a failure here is a discrepancy in the identity)");
}

// Largest number of cells of S sharing one row or one column.
int longest_line(const Pattern& p) {
  std::map<int, int> rows, cols;
  int best = 0;
  for (const auto& cell : p.cells()) {
    best = std::max({best, ++rows[cell.row], ++cols[cell.col]});
  }
  return best;
}

CheckResult vanishing_check(int max_n) {
  Checker c("vanishing when a line of S exceeds k");
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      const int k = n - r;
      for (int l = k + 1; l <= n; ++l) {
        BigInt a = d_onerow(n, r, l);
        const std::vector<BlockShape> shapes = {BlockShape::col(l)};
        BigInt b = degree_from_blocks(n, r, shapes);
        c.expect(sgn(a) == 0 && sgn(b) == 0, [&] {
          return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " l=" + std::to_string(l) +
                 ": row " + str(a) + ", column " + str(b);
        });
      }
    }
  }
  for (const auto& item : pattern_corpus()) {
    if (item.pattern.max_coordinate() > max_n || item.pattern.empty()) continue;
    std::vector<BlockShape> shapes;
    try {
      shapes = block_shapes(item.pattern);
    } catch (const UnsupportedShape&) {
      continue;
    }
    const int line = longest_line(item.pattern);
    for (int n = std::max(1, item.pattern.max_coordinate()); n <= max_n; ++n) {
      for (int r = 1; r <= n; ++r) {
        if (line <= n - r) continue;
        BigInt d = degree_from_blocks(n, r, shapes);
        c.expect(sgn(d) == 0, [&] {
          return item.name + " n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + str(d);
        });
      }
    }
  }
  return c.finish("single lines for n <= 7, corpus patterns for n <= " + std::to_string(max_n));
}

CheckResult invariance_check(int max_n) {
  Checker c("degrees invariant under row/column permutation and transpose");
  std::mt19937 rng(20141);
  for (const auto& item : pattern_corpus()) {
    const int size = item.pattern.max_coordinate();
    if (size > max_n) continue;
    std::vector<BlockShape> shapes;
    try {
      shapes = block_shapes(item.pattern);
    } catch (const UnsupportedShape&) {
      continue;
    }
    const int n = std::max(1, size);
    const auto reference = degree_table(n, shapes, Execution::Serial).degrees;
    std::vector<Pattern> variants = {transpose(item.pattern)};
    for (int t = 0; t < 3; ++t) {
      std::vector<int> rp(static_cast<std::size_t>(n)), cp(static_cast<std::size_t>(n));
      std::iota(rp.begin(), rp.end(), 1);
      std::iota(cp.begin(), cp.end(), 1);
      std::shuffle(rp.begin(), rp.end(), rng);
      std::shuffle(cp.begin(), cp.end(), rng);
      variants.push_back(permute(item.pattern, rp, cp));
      variants.push_back(transpose(variants.back()));
    }
    for (const auto& v : variants) {
      const auto got = degree_table(n, block_shapes(v), Execution::Serial).degrees;
      c.expect(got == reference, [&] { return item.name + " variant {" + v.to_cell_list() + "}"; });
    }
  }
  return c.finish("corpus patterns with n <= " + std::to_string(max_n) +
                  ", transpose plus three random relabelings");
}

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    case CheckResult::Status::Skip: return "skip";
    case CheckResult::Status::Info: return "info";
  }
  return "?";
}

}  // namespace

Report cross_check(int max_n) {
  Report report;
  report.checks.push_back(whitney_check());
  report.checks.push_back(degree_consistency_check());
  report.checks.push_back(oracle_integral_check());
  report.checks.push_back(oracle_degree_check(max_n));
  report.checks.push_back(onerow_closed_check());
  report.checks.push_back(duality_check());
  report.checks.push_back(diag_check());
  report.checks.push_back(mix_check());
  report.checks.push_back(corners_check());
  report.checks.push_back(schubert_identity_check());
  report.checks.push_back(vanishing_check(max_n));
  report.checks.push_back(invariance_check(max_n));
  return report;
}

bool Report::passed() const { return failures() == 0; }

long Report::failures() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckResult::Status::Fail; });
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << tag << "  " << c.name << " (" << c.cases << " cases; " << c.detail << ")\n";
    for (const auto& n : c.notices) out << "      note: " << n << "\n";
    for (const auto& x : c.counterexamples) out << "      counterexample: " << x << "\n";
  }
  out << (passed() ? "PASS" : "FAIL") << ": " << checks.size() << " checks, " << failures()
      << " failed\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = passed();
  doc["failures"] = failures();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["status"] = status_name(c.status);
    item["cases"] = c.cases;
    item["detail"] = c.detail;
    item["notices"] = c.notices;
    item["counterexamples"] = c.counterexamples;
    doc["checks"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

}  // namespace rankproj
