#include "rankproj/partition.hpp"

#include <algorithm>
#include <numeric>

#include "rankproj/errors.hpp"

namespace rankproj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PreconditionError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw PreconditionError("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool Partition::fits_in_box(int rows, int cols) const {
  if (parts_.empty()) return true;
  return length() <= rows && parts_.front() <= cols;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void enumerate_box(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == rows) return;
  int cap = prefix.empty() ? cols : prefix.back();
  for (int p = 1; p <= cap; ++p) {
    prefix.push_back(p);
    enumerate_box(rows, cols, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (rows < 0 || cols < 0) return out;
  enumerate_box(rows, cols, prefix, out);
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

}  // namespace rankproj
