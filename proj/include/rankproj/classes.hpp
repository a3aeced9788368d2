#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "rankproj/chow.hpp"

namespace rankproj {

/// Elementary block of an entry set, up to row/column permutation.
class BlockShape {
 public:
  enum class Kind { Row, Col, Corner, Square };

  /// l entries in one row, l >= 1.
  static BlockShape row(int length);
  /// m entries in one column; col(1) is the single cell and normalizes to row(1).
  static BlockShape col(int length);
  /// Three cells of a 2x2 box.
  static BlockShape corner() { return BlockShape(Kind::Corner, 3); }
  /// All four cells of a 2x2 box.
  static BlockShape square() { return BlockShape(Kind::Square, 4); }

  Kind kind() const { return kind_; }
  /// Row or column length; the cell count for Corner and Square.
  int length() const { return length_; }
  int cell_count() const;
  int row_count() const;
  int col_count() const;
  /// The shape after transposing the matrix.
  BlockShape transposed() const;

  /// "Row(3)", "Col(2)", "Corner", "Square".
  std::string to_string() const;

  friend bool operator==(const BlockShape&, const BlockShape&) = default;
  friend auto operator<=>(const BlockShape&, const BlockShape&) = default;

 private:
  BlockShape(Kind kind, int length) : kind_(kind), length_(length) {}

  Kind kind_;
  int length_;
};

/// The Grassmann class Sigma_{n,r,S} together with a tag naming its origin.
struct GrassmannClass {
  ChowElement value;
  std::string provenance;
};

/// Sigma for l entries in a row: c(Q^) (c_{k-l+1} + ... + c_k)(S^).
GrassmannClass sigma_row(const GrassmannContext& ctx, int length);
/// Sigma for m entries in a column:
/// sum_{i=0..r} C(m-1+k+i, m-1) c_i(Q^) c_k(S^).
GrassmannClass sigma_col(const GrassmannContext& ctx, int length);
/// Sigma for the corner {(1,1),(1,2),(2,1)}:
/// (k c_k + c_{k-1})/c + (c_k^2 - sum_i i c_i c_k)/c^2 with c = c(S^).
GrassmannClass sigma_corner(const GrassmannContext& ctx);
/// Sigma for the 2x2 square, expanded term by term.
GrassmannClass sigma_square(const GrassmannContext& ctx);

/// Dispatches on the shape; results are memoized per (k, n, shape).
GrassmannClass sigma_block(const GrassmannContext& ctx, const BlockShape& shape);

/// prod_i (1 - Sigma_{S_i}) over blocks with pairwise disjoint rows and columns.
ChowElement one_minus_sigma_blocks(const GrassmannContext& ctx, std::span<const BlockShape> shapes);

/// Sigma of the union of the blocks, 1 - one_minus_sigma_blocks.
GrassmannClass grassmann_class(const GrassmannContext& ctx, std::span<const BlockShape> shapes);

}  // namespace rankproj
