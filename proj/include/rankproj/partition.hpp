#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rankproj {

/// Weakly decreasing sequence of positive parts indexing the Schubert class
/// sigma_lambda.  Trailing zeros are stripped on construction; the empty
/// partition stands for the unit class.
class Partition {
 public:
  Partition() = default;

  /// Throws PreconditionError if `parts` is not weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  /// The rectangle with `rows` parts all equal to `cols` (empty if either is 0).
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of boxes |lambda|.
  int size() const;
  /// The i-th part (0-based), zero past the end.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  bool fits_in_box(int rows, int cols) const;
  Partition conjugate() const;
  /// True when every part of `inner` is at most the matching part here.
  bool contains(const Partition& inner) const;

  /// Bracket notation, e.g. "[2,1]"; the empty partition prints as "[]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Canonical print/iteration order: by size, then lexicographically.
struct GradedLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// All partitions inside the rows x cols box, in GradedLess order.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace rankproj
