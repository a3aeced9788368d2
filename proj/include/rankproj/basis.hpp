#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rankproj/partition.hpp"

namespace rankproj {

/// The Grassmannian G(k, n) of k-planes in n-space.  k is the corank of the
/// rank locus under study, so r = n - k.
struct GrassmannContext {
  int k = 0;
  int n = 0;

  /// Throws PreconditionError unless 0 <= k <= n.
  static GrassmannContext make(int k, int n);
  /// Context for the rank-r locus of n x n matrices; requires 0 <= r <= n.
  static GrassmannContext for_rank(int n, int r);

  int rank() const { return n - k; }
  /// Columns of the partition box, n - k.
  int cols() const { return n - k; }
  /// Dimension k(n-k) of the Grassmannian.
  int dimension() const { return k * (n - k); }

  friend bool operator==(const GrassmannContext&, const GrassmannContext&) = default;
  friend auto operator<=>(const GrassmannContext&, const GrassmannContext&) = default;
};

/// Horizontal strips: mu / lambda with mu inside the k x (n-k) box.
std::vector<Partition> horizontal_strips(const GrassmannContext& ctx, const Partition& lambda,
                                         int boxes);
/// Vertical strips: mu / lambda with mu inside the k x (n-k) box.
std::vector<Partition> vertical_strips(const GrassmannContext& ctx, const Partition& lambda,
                                       int boxes);

/// Sparse 0/1 incidence between basis indices, stored both ways (CSR).
/// `targets` is consumed by the scatter kernel, `sources` by the gather kernel.
struct StripTable {
  std::vector<std::uint32_t> target_offsets;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> source_offsets;
  std::vector<std::uint32_t> sources;

  std::size_t edge_count() const { return targets.size(); }
};

/// Schubert basis of the Chow ring of G(k, n): the partitions of the
/// k x (n-k) box in GradedLess order, plus lazily built Pieri tables.
/// Instances are immutable once published and shared between threads.
class SchubertBasis {
 public:
  /// Shared instance for `ctx`; safe to call concurrently.
  static std::shared_ptr<const SchubertBasis> get(const GrassmannContext& ctx);

  explicit SchubertBasis(const GrassmannContext& ctx);

  const GrassmannContext& context() const { return ctx_; }
  std::size_t size() const { return partitions_.size(); }
  const Partition& partition(std::size_t index) const { return partitions_[index]; }
  std::optional<std::size_t> index_of(const Partition& p) const;
  /// Index of the full box (the point class).
  std::size_t top_index() const { return partitions_.size() - 1; }

  /// Table for multiplication by sigma_(j), 0 <= j <= n-k.
  const StripTable& row_strip(int j) const;
  /// Table for multiplication by sigma_(1^i), 0 <= i <= k.
  const StripTable& col_strip(int i) const;

 private:
  StripTable build(bool horizontal, int boxes) const;

  GrassmannContext ctx_;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;

  mutable std::vector<std::once_flag> row_once_;
  mutable std::vector<std::once_flag> col_once_;
  mutable std::vector<StripTable> row_tables_;
  mutable std::vector<StripTable> col_tables_;
};

}  // namespace rankproj
