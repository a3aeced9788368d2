#pragma once

#include <span>
#include <string>
#include <vector>

#include "rankproj/bigint.hpp"
#include "rankproj/classes.hpp"

namespace rankproj {

/// d_{n,r,S} = integral over G(n-r, n) of c(S^)^n (1 - Sigma_S), with Sigma_S
/// assembled from the blocks.  Throws ConsistencyError on a negative result.
BigInt degree_from_blocks(const GrassmannContext& ctx, std::span<const BlockShape> shapes);
BigInt degree_from_blocks(int n, int r, std::span<const BlockShape> shapes);

/// l entries in one row: integral of c^{n-1} (c_0 + ... + c_{k-l}).  l = 0 is the empty set.
BigInt d_onerow(int n, int r, int length);
/// Closed binomial form of d_onerow, valid for 0 <= l <= n-r.
BigInt d_onerow_closed(int n, int r, int length);
/// m entries in one column, m >= 1.
BigInt d_onecol(int n, int r, int length);
/// Rows of the given lengths with no shared column; at most n lengths.
BigInt d_rows(int n, int r, std::span<const int> lengths);
/// s entries with no two on a row or column: sum_j C(s,j) (-1)^j deg sigma_{n-j, r-j}.
BigInt d_diag(int n, int r, int s);
/// Row blocks `rows` and column blocks `cols`, pairwise disjoint.
BigInt d_mix(int n, int r, std::span<const int> rows, std::span<const int> cols);
/// g corners with disjoint rows and columns.
BigInt d_corners(int n, int r, int g);

/// Both sides of the Schubert identity
///   int_{G(k,n-1)} c(S^)^n c_i(Q') =
///   prod_{j<k} C(n+j, k+1)/C(k+1+j, k+1) * C(n-k-1, i) C(i+k-1, i) / C(2k+i, i).
BigInt schubert_identity_lhs(int k, int n, int i);
BigRational schubert_identity_rhs(int k, int n, int i);

/// Per-rank degrees d_{n,r,S} for r = 1..n.
struct DegreeTable {
  int n = 0;
  std::string description;
  std::vector<BigInt> degrees;  ///< degrees[r-1]

  const BigInt& at(int r) const { return degrees.at(static_cast<std::size_t>(r - 1)); }
};

enum class Execution { Serial, Parallel };

/// Evaluates every rank.  The parallel path distributes ranks over OpenMP
/// threads; the serial path is the reference and both agree exactly.
DegreeTable degree_table(int n, std::span<const BlockShape> shapes,
                         Execution exec = Execution::Parallel);

}  // namespace rankproj
