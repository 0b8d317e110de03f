#pragma once

// Periodic correlation kernels over one period of two 0/1 sequences:
//
//   R(tau) = sum_{i < P} (-1)^(a[i] xor b[(i + tau) mod P]),  tau in [0, P)
//
// `correlate_reference` is the plain serial double loop and is kept as the
// oracle for the other two. `correlate_parallel` splits shifts across OpenMP
// threads; `correlate_packed` additionally packs both sequences into 64-bit
// words and counts disagreements with popcount.

#include <cstdint>
#include <span>
#include <vector>

namespace legseq::kernels {

using Bits = std::span<const std::uint8_t>;

std::vector<std::int64_t> correlate_reference(Bits a, Bits b);
std::vector<std::int64_t> correlate_parallel(Bits a, Bits b);
std::vector<std::int64_t> correlate_packed(Bits a, Bits b);

/// Threads available to the parallel kernels (1 without OpenMP).
int max_threads();

}  // namespace legseq::kernels
