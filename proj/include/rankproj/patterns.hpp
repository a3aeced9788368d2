#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rankproj/classes.hpp"

namespace rankproj {

/// A matrix entry, 1-based.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The entry set S.  Coordinates are not tied to a matrix size; use
/// `validate_for` before evaluating degrees for a given n.
class Pattern {
 public:
  Pattern() = default;
  /// Throws PreconditionError on duplicate cells or coordinates < 1.
  explicit Pattern(std::vector<Cell> cells);

  /// Cells in (row, col) order.
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  int max_coordinate() const;
  /// Throws PreconditionError if some coordinate exceeds n.
  void validate_for(int n) const;

  /// "r,c;r,c;..." (the parse_cells grammar).
  std::string to_cell_list() const;
  /// One line per row up to the last occupied row, X for members.
  std::string to_grid() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Cell> cells_;
};

/// A connected component of S under "shares a row or a column".
struct Block {
  std::vector<Cell> cells;
  std::vector<int> rows;  ///< sorted, distinct
  std::vector<int> cols;  ///< sorted, distinct
};

/// Grid text: lines over {X, x, ., space}; lines starting with '#' are
/// comments and do not count as matrix rows.
Pattern parse_grid(std::string_view text);
/// "r,c;r,c;..." with optional surrounding whitespace; "" is the empty set.
Pattern parse_cells(std::string_view text);

/// Components ordered by their smallest cell.
std::vector<Block> decompose(const Pattern& pattern);
/// Row(l), Col(m), Corner or Square; throws UnsupportedShape otherwise.
BlockShape classify(const Block& block);
/// decompose + classify for every block.
std::vector<BlockShape> block_shapes(const Pattern& pattern);

Pattern transpose(const Pattern& pattern);
/// Relabels rows and columns: cell (r, c) goes to (row_perm[r-1], col_perm[c-1]).
Pattern permute(const Pattern& pattern, const std::vector<int>& row_perm,
                const std::vector<int>& col_perm);

/// A pattern realizing the shapes as disjoint blocks placed down the diagonal.
Pattern layout_blocks(const std::vector<BlockShape>& shapes);

}  // namespace rankproj
