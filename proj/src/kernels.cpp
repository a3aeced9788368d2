#include "rankproj/kernels.hpp"

#include <omp.h>

namespace rankproj::kernels {

void apply_strip_serial(const StripTable& table, std::span<const BigInt> in,
                        std::span<BigInt> out) {
  const std::size_t n = in.size();
  for (std::size_t src = 0; src < n; ++src) {
    if (sgn(in[src]) == 0) continue;
    for (auto e = table.target_offsets[src]; e < table.target_offsets[src + 1]; ++e) {
      out[table.targets[e]] += in[src];
    }
  }
}

void apply_strip_parallel(const StripTable& table, std::span<const BigInt> in,
                          std::span<BigInt> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t dst = 0; dst < n; ++dst) {
    const auto d = static_cast<std::size_t>(dst);
    for (auto e = table.source_offsets[d]; e < table.source_offsets[d + 1]; ++e) {
      const BigInt& v = in[table.sources[e]];
      if (sgn(v) != 0) out[d] += v;
    }
  }
}

void apply_strip(const StripTable& table, std::span<const BigInt> in, std::span<BigInt> out) {
  if (in.size() >= kParallelThreshold && !omp_in_parallel()) {
    apply_strip_parallel(table, in, out);
  } else {
    apply_strip_serial(table, in, out);
  }
}

}  // namespace rankproj::kernels
