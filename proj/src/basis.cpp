#include "rankproj/basis.hpp"

#include <algorithm>

#include "rankproj/errors.hpp"

namespace rankproj {

GrassmannContext GrassmannContext::make(int k, int n) {
  if (n < 0 || k < 0 || k > n) {
    throw PreconditionError("Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) +
                            ") requires 0 <= k <= n");
  }
  return GrassmannContext{k, n};
}

GrassmannContext GrassmannContext::for_rank(int n, int r) {
  if (r < 0 || r > n) {
    throw PreconditionError("rank r=" + std::to_string(r) + " outside [0, " + std::to_string(n) +
                            "]");
  }
  return make(n - r, n);
}

namespace {

void grow_horizontal(const GrassmannContext& ctx, const Partition& lambda, int row, int left,
                     std::vector<int>& mu, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(mu);
    return;
  }
  if (row >= ctx.k) return;
  // Row `row` may grow up to the previous row's old length (box width for row 0).
  int cap = row == 0 ? ctx.cols() : lambda.part(row - 1);
  int base = lambda.part(row);
  for (int add = std::min(left, cap - base); add >= 0; --add) {
    mu[static_cast<std::size_t>(row)] = base + add;
    grow_horizontal(ctx, lambda, row + 1, left - add, mu, out);
  }
  mu[static_cast<std::size_t>(row)] = base;
}

void grow_vertical(const GrassmannContext& ctx, const Partition& lambda, int row, int left,
                   std::vector<int>& mu, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(mu);
    return;
  }
  if (row >= ctx.k || ctx.k - row < left) return;
  int base = lambda.part(row);
  bool can_add = base + 1 <= ctx.cols() &&
                 (row == 0 || base + 1 <= mu[static_cast<std::size_t>(row - 1)]);
  if (can_add) {
    mu[static_cast<std::size_t>(row)] = base + 1;
    grow_vertical(ctx, lambda, row + 1, left - 1, mu, out);
    mu[static_cast<std::size_t>(row)] = base;
  }
  grow_vertical(ctx, lambda, row + 1, left, mu, out);
}

void check_strip_args(const GrassmannContext& ctx, const Partition& lambda, int boxes, int max) {
  if (!lambda.fits_in_box(ctx.k, ctx.cols())) {
    throw PreconditionError("partition " + lambda.to_string() + " is outside the " +
                            std::to_string(ctx.k) + "x" + std::to_string(ctx.cols()) + " box");
  }
  if (boxes < 0 || boxes > max) {
    throw PreconditionError("strip size " + std::to_string(boxes) + " outside [0, " +
                            std::to_string(max) + "]");
  }
}

}  // namespace

std::vector<Partition> horizontal_strips(const GrassmannContext& ctx, const Partition& lambda,
                                         int boxes) {
  check_strip_args(ctx, lambda, boxes, ctx.cols());
  std::vector<int> mu(static_cast<std::size_t>(ctx.k), 0);
  for (int i = 0; i < lambda.length(); ++i) mu[static_cast<std::size_t>(i)] = lambda.part(i);
  std::vector<Partition> out;
  grow_horizontal(ctx, lambda, 0, boxes, mu, out);
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

std::vector<Partition> vertical_strips(const GrassmannContext& ctx, const Partition& lambda,
                                       int boxes) {
  check_strip_args(ctx, lambda, boxes, ctx.k);
  std::vector<int> mu(static_cast<std::size_t>(ctx.k), 0);
  for (int i = 0; i < lambda.length(); ++i) mu[static_cast<std::size_t>(i)] = lambda.part(i);
  std::vector<Partition> out;
  grow_vertical(ctx, lambda, 0, boxes, mu, out);
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

std::shared_ptr<const SchubertBasis> SchubertBasis::get(const GrassmannContext& ctx) {
  static std::mutex mutex;
  static std::map<GrassmannContext, std::shared_ptr<const SchubertBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(ctx);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const SchubertBasis>(ctx);
  cache.emplace(ctx, basis);
  return basis;
}

SchubertBasis::SchubertBasis(const GrassmannContext& ctx)
    : ctx_(GrassmannContext::make(ctx.k, ctx.n)),
      partitions_(partitions_in_box(ctx.k, ctx.cols())),
      row_once_(static_cast<std::size_t>(ctx.cols() + 1)),
      col_once_(static_cast<std::size_t>(ctx.k + 1)),
      row_tables_(static_cast<std::size_t>(ctx.cols() + 1)),
      col_tables_(static_cast<std::size_t>(ctx.k + 1)) {
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], i);
}

std::optional<std::size_t> SchubertBasis::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const StripTable& SchubertBasis::row_strip(int j) const {
  if (j < 0 || j > ctx_.cols()) throw PreconditionError("row strip index out of range");
  auto slot = static_cast<std::size_t>(j);
  std::call_once(row_once_[slot], [&] { row_tables_[slot] = build(true, j); });
  return row_tables_[slot];
}

const StripTable& SchubertBasis::col_strip(int i) const {
  if (i < 0 || i > ctx_.k) throw PreconditionError("column strip index out of range");
  auto slot = static_cast<std::size_t>(i);
  std::call_once(col_once_[slot], [&] { col_tables_[slot] = build(false, i); });
  return col_tables_[slot];
}

StripTable SchubertBasis::build(bool horizontal, int boxes) const {
  const std::size_t n = partitions_.size();
  StripTable t;
  t.target_offsets.reserve(n + 1);
  t.target_offsets.push_back(0);
  std::vector<std::uint32_t> in_degree(n, 0);
  for (std::size_t src = 0; src < n; ++src) {
    auto grown = horizontal ? horizontal_strips(ctx_, partitions_[src], boxes)
                            : vertical_strips(ctx_, partitions_[src], boxes);
    for (const auto& mu : grown) {
      auto dst = static_cast<std::uint32_t>(index_.at(mu));
      t.targets.push_back(dst);
      ++in_degree[dst];
    }
    t.target_offsets.push_back(static_cast<std::uint32_t>(t.targets.size()));
  }
  t.source_offsets.assign(n + 1, 0);
  for (std::size_t d = 0; d < n; ++d) t.source_offsets[d + 1] = t.source_offsets[d] + in_degree[d];
  t.sources.assign(t.targets.size(), 0);
  std::vector<std::uint32_t> fill(t.source_offsets.begin(), t.source_offsets.end() - 1);
  for (std::size_t src = 0; src < n; ++src) {
    for (auto e = t.target_offsets[src]; e < t.target_offsets[src + 1]; ++e) {
      t.sources[fill[t.targets[e]]++] = static_cast<std::uint32_t>(src);
    }
  }
  return t;
}

}  // namespace rankproj
