#include "rankproj/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "rankproj/errors.hpp"

namespace rankproj {

Pattern::Pattern(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    if (c.row < 1 || c.col < 1) {
      throw PreconditionError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                              ") has a coordinate below 1");
    }
    if (i > 0 && cells_[i - 1] == c) {
      throw PreconditionError("duplicate cell (" + std::to_string(c.row) + "," +
                              std::to_string(c.col) + ")");
    }
  }
}

int Pattern::max_coordinate() const {
  int m = 0;
  for (const auto& c : cells_) m = std::max({m, c.row, c.col});
  return m;
}

void Pattern::validate_for(int n) const {
  for (const auto& c : cells_) {
    if (c.row > n || c.col > n) {
      throw PreconditionError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                              ") lies outside the " + std::to_string(n) + "x" +
                              std::to_string(n) + " matrix");
    }
  }
}

std::string Pattern::to_cell_list() const {
  std::string out;
  for (const auto& c : cells_) {
    if (!out.empty()) out += ';';
    out += std::to_string(c.row) + "," + std::to_string(c.col);
  }
  return out;
}

std::string Pattern::to_grid() const {
  int rows = 0, cols = 0;
  for (const auto& c : cells_) {
    rows = std::max(rows, c.row);
    cols = std::max(cols, c.col);
  }
  std::vector<std::string> lines(static_cast<std::size_t>(rows),
                                 std::string(static_cast<std::size_t>(cols), '.'));
  for (const auto& c : cells_) {
    lines[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = 'X';
  }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Pattern parse_grid(std::string_view text) {
  std::vector<Cell> cells;
  int physical = 0;
  int row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++physical;
    const bool last = end == text.size();
    pos = end + 1;
    if (!line.empty() && line.front() == '#') continue;
    if (last && line.empty()) break;
    ++row;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char ch = line[i];
      if (ch == 'X' || ch == 'x') {
        cells.push_back(Cell{row, static_cast<int>(i) + 1});
      } else if (ch != '.' && ch != ' ') {
        throw ParseError(std::string("illegal character '") + ch + "' in grid", physical,
                         static_cast<int>(i) + 1);
      }
    }
  }
  return Pattern(std::move(cells));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_coordinate(std::string_view token, int item) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("cell " + std::to_string(item) + ": '" + std::string(token) +
                     "' is not an integer");
  }
  if (value < 1) {
    throw ParseError("cell " + std::to_string(item) + ": coordinates are 1-based");
  }
  return value;
}

}  // namespace

Pattern parse_cells(std::string_view text) {
  std::vector<Cell> cells;
  text = trim(text);
  if (text.empty()) return Pattern{};
  int item = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view pair = text.substr(pos, end - pos);
    ++item;
    std::size_t comma = pair.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("cell " + std::to_string(item) + ": expected 'row,col', got '" +
                       std::string(trim(pair)) + "'");
    }
    int r = parse_coordinate(pair.substr(0, comma), item);
    int c = parse_coordinate(pair.substr(comma + 1), item);
    Cell cell{r, c};
    if (std::find(cells.begin(), cells.end(), cell) != cells.end()) {
      throw ParseError("duplicate cell " + std::to_string(r) + "," + std::to_string(c));
    }
    cells.push_back(cell);
    pos = end + 1;
  }
  return Pattern(std::move(cells));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(const std::vector<Cell>& cells) {
  std::string out = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(cells[i].row) + "," + std::to_string(cells[i].col) + ")";
  }
  return out + "}";
}

}  // namespace

std::vector<Block> decompose(const Pattern& pattern) {
  // Nodes: one per distinct row and one per distinct column; each cell joins its two.
  std::map<int, std::size_t> row_node, col_node;
  for (const auto& c : pattern.cells()) {
    row_node.emplace(c.row, 0);
    col_node.emplace(c.col, 0);
  }
  std::size_t next = 0;
  for (auto& [_, id] : row_node) id = next++;
  for (auto& [_, id] : col_node) id = next++;
  UnionFind uf(next);
  for (const auto& c : pattern.cells()) uf.unite(row_node[c.row], col_node[c.col]);

  // Cells are sorted, so the first cell seen for a component is its minimum.
  std::map<std::size_t, std::size_t> block_of_root;
  std::vector<Block> blocks;
  for (const auto& c : pattern.cells()) {
    std::size_t root = uf.find(row_node[c.row]);
    auto [it, fresh] = block_of_root.emplace(root, blocks.size());
    if (fresh) blocks.emplace_back();
    Block& b = blocks[it->second];
    b.cells.push_back(c);
    b.rows.push_back(c.row);
    b.cols.push_back(c.col);
  }
  for (auto& b : blocks) {
    std::sort(b.rows.begin(), b.rows.end());
    b.rows.erase(std::unique(b.rows.begin(), b.rows.end()), b.rows.end());
    std::sort(b.cols.begin(), b.cols.end());
    b.cols.erase(std::unique(b.cols.begin(), b.cols.end()), b.cols.end());
  }
  return blocks;
}

BlockShape classify(const Block& block) {
  const auto cells = static_cast<int>(block.cells.size());
  if (cells == 0) throw PreconditionError("empty block");
  if (block.rows.size() == 1) return BlockShape::row(cells);
  if (block.cols.size() == 1) return BlockShape::col(cells);
  if (block.rows.size() == 2 && block.cols.size() == 2) {
    if (cells == 3) return BlockShape::corner();
    if (cells == 4) return BlockShape::square();
  }
  throw UnsupportedShape("no Grassmann class is known for the block " + describe(block.cells));
}

std::vector<BlockShape> block_shapes(const Pattern& pattern) {
  std::vector<BlockShape> out;
  for (const auto& b : decompose(pattern)) out.push_back(classify(b));
  return out;
}

Pattern transpose(const Pattern& pattern) {
  std::vector<Cell> cells;
  for (const auto& c : pattern.cells()) cells.push_back(Cell{c.col, c.row});
  return Pattern(std::move(cells));
}

Pattern permute(const Pattern& pattern, const std::vector<int>& row_perm,
                const std::vector<int>& col_perm) {
  std::vector<Cell> cells;
  for (const auto& c : pattern.cells()) {
    cells.push_back(Cell{row_perm.at(static_cast<std::size_t>(c.row - 1)),
                         col_perm.at(static_cast<std::size_t>(c.col - 1))});
  }
  return Pattern(std::move(cells));
}

Pattern layout_blocks(const std::vector<BlockShape>& shapes) {
  std::vector<Cell> cells;
  int r = 1, c = 1;
  for (const auto& s : shapes) {
    switch (s.kind()) {
      case BlockShape::Kind::Row:
        for (int j = 0; j < s.length(); ++j) cells.push_back(Cell{r, c + j});
        break;
      case BlockShape::Kind::Col:
        for (int i = 0; i < s.length(); ++i) cells.push_back(Cell{r + i, c});
        break;
      case BlockShape::Kind::Corner:
        cells.insert(cells.end(), {Cell{r, c}, Cell{r, c + 1}, Cell{r + 1, c}});
        break;
      case BlockShape::Kind::Square:
        cells.insert(cells.end(), {Cell{r, c}, Cell{r, c + 1}, Cell{r + 1, c}, Cell{r + 1, c + 1}});
        break;
    }
    r += s.row_count();
    c += s.col_count();
  }
  return Pattern(std::move(cells));
}

}  // namespace rankproj
