#pragma once

#include <span>

#include "rankproj/basis.hpp"
#include "rankproj/bigint.hpp"

namespace rankproj::kernels {

/// out[dst] += in[src] over every edge of `table`.  Both spans are indexed by
/// the basis; `in` and `out` must not alias.
///
/// The serial version scatters along `targets` and is the reference.  The
/// parallel version gathers along `sources` with one OpenMP work item per
/// destination, so no two threads write the same coefficient.
void apply_strip_serial(const StripTable& table, std::span<const BigInt> in, std::span<BigInt> out);
void apply_strip_parallel(const StripTable& table, std::span<const BigInt> in,
                          std::span<BigInt> out);

/// Basis size from which `apply_strip` switches to the parallel kernel.
inline constexpr std::size_t kParallelThreshold = 2048;

/// Dispatches on basis size; falls back to serial inside an active parallel region.
void apply_strip(const StripTable& table, std::span<const BigInt> in, std::span<BigInt> out);

}  // namespace rankproj::kernels
