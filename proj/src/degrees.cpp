#include "rankproj/degrees.hpp"

#include <omp.h>

#include "rankproj/errors.hpp"

namespace rankproj {

namespace {

GrassmannContext context_for(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw PreconditionError("rank r=" + std::to_string(r) + " must lie in [1, n=" +
                            std::to_string(n) + "]");
  }
  return GrassmannContext::for_rank(n, r);
}

// c_0 + ... + c_top of S^dual.
ChowElement partial_total_s(const GrassmannContext& ctx, int top) {
  ChowElement out(ctx);
  for (int i = 0; i <= top; ++i) out += special_s(ctx, i);
  return out;
}

// c^e * prod_j (c_0 + ... + c_{k-l_j}), built by repeated strips.
ChowElement row_product(const GrassmannContext& ctx, int exponent, std::span<const int> lengths) {
  ChowElement acc = total_s_power(ctx, exponent);
  for (int l : lengths) {
    if (l < 0) throw PreconditionError("row length must be nonnegative");
    ChowElement next(ctx);
    for (int i = 0; i <= ctx.k - l; ++i) next += mul_special_s(acc, i);
    acc = std::move(next);
  }
  return acc;
}

ChowElement one_minus_col(const GrassmannContext& ctx, int m) {
  if (m < 1) throw PreconditionError("column length must be >= 1");
  ChowElement sum(ctx);
  for (int i = 0; i <= ctx.rank(); ++i) {
    sum += special_q(ctx, i) * binomial(m - 1 + ctx.k + i, m - 1);
  }
  return ChowElement::one(ctx) - mul_special_s(sum, ctx.k);
}

}  // namespace

BigInt degree_from_blocks(const GrassmannContext& ctx, std::span<const BlockShape> shapes) {
  ChowElement acc = total_s_power(ctx, ctx.n);
  for (const auto& shape : shapes) {
    acc = mul(acc, ChowElement::one(ctx) - sigma_block(ctx, shape).value);
  }
  BigInt d = integral(acc);
  if (sgn(d) < 0) {
    throw ConsistencyError("negative degree " + to_decimal(d) + " for n=" + std::to_string(ctx.n) +
                           ", r=" + std::to_string(ctx.rank()));
  }
  return d;
}

BigInt degree_from_blocks(int n, int r, std::span<const BlockShape> shapes) {
  return degree_from_blocks(context_for(n, r), shapes);
}

BigInt d_onerow(int n, int r, int length) {
  const auto ctx = context_for(n, r);
  if (length < 0) throw PreconditionError("row length must be nonnegative");
  ChowElement acc = total_s_power(ctx, n - 1);
  return integral(mul(acc, partial_total_s(ctx, ctx.k - length)));
}

BigInt d_onerow_closed(int n, int r, int length) {
  const auto ctx = context_for(n, r);
  const int k = ctx.k;
  if (length < 0 || length > k) {
    throw PreconditionError("closed form requires 0 <= l <= n-r");
  }
  BigRational lead = 1;
  BigRational shifted = 1;
  for (int j = 0; j < k; ++j) {
    lead *= BigRational(binomial(n + j, k), binomial(k + j, k));
    shifted *= BigRational(binomial(n + j, k + 1), binomial(k + 1 + j, k + 1));
  }
  BigRational alternating = 0;
  for (int i = 0; i <= n - k - 1; ++i) {
    BigRational term(binomial(length - 1 + k + i, length - 1) * binomial(n - k - 1, i) *
                         binomial(i + k - 1, i),
                     binomial(2 * k + i, i));
    if (i % 2) alternating -= term;
    else alternating += term;
  }
  BigRational d = lead - shifted * alternating;
  d.canonicalize();
  if (d.get_den() != 1) throw ConsistencyError("closed single-row form is not an integer");
  return d.get_num();
}

BigInt d_onecol(int n, int r, int length) {
  const auto ctx = context_for(n, r);
  return integral(mul(total_s_power(ctx, n), one_minus_col(ctx, length)));
}

BigInt d_rows(int n, int r, std::span<const int> lengths) {
  const auto ctx = context_for(n, r);
  if (static_cast<int>(lengths.size()) > n) {
    throw PreconditionError("more row lengths than rows");
  }
  return integral(row_product(ctx, n - static_cast<int>(lengths.size()), lengths));
}

BigInt d_diag(int n, int r, int s) {
  // r = 0 is allowed here: the rank-zero locus is a point and the sum still makes sense.
  if (n < 1 || r < 0 || r > n) throw PreconditionError("rank r must lie in [0, n]");
  if (s < 0 || s > n) throw PreconditionError("diagonal size must lie in [0, n]");
  const int k = n - r;
  BigInt sum = 0;
  for (int j = 0; j <= s; ++j) {
    if (n - j < k) break;
    BigInt term = binomial(s, j) * deg_sigma(n - j, k);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt d_mix(int n, int r, std::span<const int> rows, std::span<const int> cols) {
  const auto ctx = context_for(n, r);
  if (static_cast<int>(rows.size()) > n) throw PreconditionError("more row lengths than rows");
  ChowElement acc = row_product(ctx, n - static_cast<int>(rows.size()), rows);
  for (int m : cols) acc = mul(acc, one_minus_col(ctx, m));
  return integral(acc);
}

BigInt d_corners(int n, int r, int g) {
  const auto ctx = context_for(n, r);
  if (g < 0 || 2 * g > n) throw PreconditionError("corners need 0 <= 2g <= n");
  const int k = ctx.k;
  const ChowElement c = total_s(ctx);
  const ChowElement ck = special_s(ctx, k);
  // c^2 - (k c_k + c_{k-1}) c - (c_k^2 - sum_i i c_i c_k)
  ChowElement factor = mul_total_s(c);
  factor -= mul_total_s(ck * BigInt(k) + special_s(ctx, k - 1));
  factor -= mul_special_s(ck, k);
  for (int i = 0; i <= k; ++i) factor += mul_special_s(ck, i) * BigInt(i);
  return integral(mul(total_s_power(ctx, n - 2 * g), power(factor, g)));
}

BigInt schubert_identity_lhs(int k, int n, int i) {
  const auto ctx = GrassmannContext::make(k, n - 1);
  if (i < 0 || i > ctx.cols()) return 0;
  // c_i(Q') = sigma_(i), without the dual sign.
  ChowElement ci = ChowElement::schubert(ctx, i == 0 ? Partition{} : Partition({i}));
  return integral(mul(total_s_power(ctx, n), ci));
}

BigRational schubert_identity_rhs(int k, int n, int i) {
  BigRational v = 1;
  for (int j = 0; j < k; ++j) {
    v *= BigRational(binomial(n + j, k + 1), binomial(k + 1 + j, k + 1));
  }
  v *= BigRational(binomial(n - k - 1, i) * binomial(i + k - 1, i), binomial(2 * k + i, i));
  v.canonicalize();
  return v;
}

DegreeTable degree_table(int n, std::span<const BlockShape> shapes, Execution exec) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  DegreeTable table;
  table.n = n;
  for (const auto& s : shapes) {
    table.description += (table.description.empty() ? "" : "+") + s.to_string();
  }
  if (table.description.empty()) table.description = "empty";
  table.degrees.assign(static_cast<std::size_t>(n), BigInt(0));

  if (exec == Execution::Serial) {
    for (int r = 1; r <= n; ++r) {
      table.degrees[static_cast<std::size_t>(r - 1)] = degree_from_blocks(n, r, shapes);
    }
    return table;
  }

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 1; r <= n; ++r) {
    try {
      table.degrees[static_cast<std::size_t>(r - 1)] = degree_from_blocks(n, r, shapes);
    } catch (...) {
#pragma omp critical(rankproj_table_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace rankproj
