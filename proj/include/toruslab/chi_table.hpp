#pragma once

// Frozen sample table for the smooth even cutoff used by every kernel sum.
// chi(x) = 1 on |x| <= 1/2, 0 on |x| >= 1, and exp(-1/s) glue in between:
//   s = 2(|x| - 1/2),  chi = e^{-1/(1-s)} / (e^{-1/s} + e^{-1/(1-s)}).
// The 4096 values below sample [0,1] uniformly; they are frozen as hex
// literals so that every platform sums bit-identical coefficients.

namespace toruslab::detail {

inline constexpr int kChiTableSize = 4096;

inline constexpr double kChiTable[4096] = {
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.0000000000000p+0,
    0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x1.fffffffffffffp-1, 0x1.ffffffffffffdp-1,
    0x1.ffffffffffffcp-1, 0x1.ffffffffffff8p-1, 0x1.ffffffffffff1p-1, 0x1.fffffffffffe4p-1,
    0x1.fffffffffffcep-1, 0x1.fffffffffffa8p-1, 0x1.fffffffffff6ap-1, 0x1.fffffffffff05p-1,
    0x1.ffffffffffe62p-1, 0x1.ffffffffffd61p-1, 0x1.ffffffffffbcdp-1, 0x1.ffffffffff95dp-1,
    0x1.ffffffffff5a9p-1, 0x1.ffffffffff01ap-1, 0x1.fffffffffe7d7p-1, 0x1.fffffffffdbb6p-1,
    0x1.fffffffffca1cp-1, 0x1.fffffffffb0d2p-1, 0x1.fffffffff8cdbp-1, 0x1.fffffffff5a36p-1,
    0x1.fffffffff138dp-1, 0x1.ffffffffeb1d8p-1, 0x1.ffffffffe2be6p-1, 0x1.ffffffffd75c9p-1,
    0x1.ffffffffc8028p-1, 0x1.ffffffffb3764p-1, 0x1.ffffffff98296p-1, 0x1.ffffffff7425ap-1,
    0x1.ffffffff44f65p-1, 0x1.ffffffff078cbp-1, 0x1.fffffffeb820ap-1, 0x1.fffffffe520bfp-1,
    0x1.fffffffdcf9e7p-1, 0x1.fffffffd29ed9p-1, 0x1.fffffffc589adp-1, 0x1.fffffffb5192fp-1,
    0x1.fffffffa08c3fp-1, 0x1.fffffff86fc97p-1, 0x1.fffffff6758e1p-1, 0x1.fffffff405e17p-1,
    0x1.fffffff109018p-1, 0x1.ffffffed63167p-1, 0x1.ffffffe8f3a02p-1, 0x1.ffffffe394d39p-1,
    0x1.ffffffdd1ae85p-1, 0x1.ffffffd553544p-1, 0x1.ffffffcc03f50p-1, 0x1.ffffffc0ea24dp-1,
    0x1.ffffffb3b9bc2p-1, 0x1.ffffffa41bfd6p-1, 0x1.ffffff91ae69ap-1, 0x1.ffffff7c017eap-1,
    0x1.ffffff62975cbp-1, 0x1.ffffff44e252cp-1, 0x1.ffffff224351cp-1, 0x1.fffffefa0844fp-1,
    0x1.fffffecb6a4f2p-1, 0x1.fffffe958bebfp-1, 0x1.fffffe5776f5bp-1, 0x1.fffffe101a8dbp-1,
    0x1.fffffdbe48e81p-1, 0x1.fffffd60b4f9fp-1, 0x1.fffffcf5f00a9p-1, 0x1.fffffc7c67262p-1,
    0x1.fffffbf26073ap-1, 0x1.fffffb55f86c8p-1, 0x1.fffffaa51ef73p-1, 0x1.fffff9dd94647p-1,
    0x1.fffff8fce64f4p-1, 0x1.fffff8006c60cp-1, 0x1.fffff6e544f81p-1, 0x1.fffff5a851b63p-1,
    0x1.fffff44633effp-1, 0x1.fffff2bb49049p-1, 0x1.fffff103a69cbp-1, 0x1.ffffef1b16cf6p-1,
    0x1.ffffecfd14311p-1, 0x1.ffffeaa4c5cb7p-1, 0x1.ffffe80cfaffep-1, 0x1.ffffe5302756ep-1,
    0x1.ffffe2085e3b5p-1, 0x1.ffffde8f4ea50p-1, 0x1.ffffdabe3eb31p-1, 0x1.ffffd68e07368p-1,
    0x1.ffffd1f70f309p-1, 0x1.ffffccf14743ep-1, 0x1.ffffc774251cbp-1, 0x1.ffffc1769ecdep-1,
    0x1.ffffbaef26290p-1, 0x1.ffffb3d3a40e7p-1, 0x1.ffffac1973ba2p-1, 0x1.ffffa3b55e0e0p-1,
    0x1.ffff9a9b94d9ep-1, 0x1.ffff90bfae257p-1, 0x1.ffff86149f7b5p-1, 0x1.ffff7a8cb9378p-1,
    0x1.ffff6e19a1dc2p-1, 0x1.ffff60ac516c0p-1, 0x1.ffff52350ccddp-1, 0x1.ffff42a361395p-1,
    0x1.ffff31e61fafap-1, 0x1.ffff1feb5880bp-1, 0x1.ffff0ca056de4p-1, 0x1.fffef7f19c7fep-1,
    0x1.fffee1cadd569p-1, 0x1.fffeca16fb536p-1, 0x1.fffeb0c00242bp-1, 0x1.fffe95af23babp-1,
    0x1.fffe78ccb3215p-1, 0x1.fffe5a0021c9ap-1, 0x1.fffe392ffb287p-1, 0x1.fffe1641e1249p-1,
    0x1.fffdf11a887f9p-1, 0x1.fffdc99db55bdp-1, 0x1.fffd9fae37ddfp-1, 0x1.fffd732de8eccp-1,
    0x1.fffd43fda70e6p-1, 0x1.fffd11fd53659p-1, 0x1.fffcdd0bcecd9p-1, 0x1.fffca506f717fp-1,
    0x1.fffc69cba469ep-1, 0x1.fffc2b35a6bccp-1, 0x1.fffbe91fc37f9p-1, 0x1.fffba363b35c1p-1,
    0x1.fffb59da201e8p-1, 0x1.fffb0c5aa2c0ep-1, 0x1.fffababbc199fp-1, 0x1.fffa64d2eeb0bp-1,
    0x1.fffa0a748633bp-1, 0x1.fff9ab73cd156p-1, 0x1.fff947a2efcc4p-1, 0x1.fff8ded30138dp-1,
    0x1.fff870d3f9af9p-1, 0x1.fff7fd74b627ap-1, 0x1.fff78482f78f1p-1, 0x1.fff705cb6242fp-1,
    0x1.fff681197dac1p-1, 0x1.fff5f637b400fp-1, 0x1.fff564ef522adp-1, 0x1.fff4cd0887cf9p-1,
    0x1.fff42e4a677e9p-1, 0x1.fff3887ae7025p-1, 0x1.fff2db5edfd37p-1, 0x1.fff226ba0fb01p-1,
    0x1.fff16a4f19541p-1, 0x1.fff0a5df85557p-1, 0x1.ffefd92bc31f9p-1, 0x1.ffef03f32a11ep-1,
    0x1.ffee25f3fabe0p-1, 0x1.ffed3eeb60463p-1, 0x1.ffec4e9571db9p-1, 0x1.ffeb54ad345b4p-1,
    0x1.ffea50ec9c0a5p-1, 0x1.ffe9430c8e6f5p-1, 0x1.ffe82ac4e4493p-1, 0x1.ffe707cc6ba35p-1,
    0x1.ffe5d9d8ea055p-1, 0x1.ffe4a09f1ebe5p-1, 0x1.ffe35bd2c54bep-1, 0x1.ffe20b2697d97p-1,
    0x1.ffe0ae4c51dbbp-1, 0x1.ffdf44f4b2c28p-1, 0x1.ffddcecf80c4bp-1, 0x1.ffdc4b8b8bc2dp-1,
    0x1.ffdabad6b040cp-1, 0x1.ffd91c5dda751p-1, 0x1.ffd76fcd096f4p-1, 0x1.ffd5b4cf52511p-1,
    0x1.ffd3eb0ee39d6p-1, 0x1.ffd2123508999p-1, 0x1.ffd029ea2cc1ap-1, 0x1.ffce31d5df4f9p-1,
    0x1.ffcc299ed6d26p-1, 0x1.ffca10eaf4d6ep-1, 0x1.ffc7e75f49a00p-1, 0x1.ffc5aca017ef0p-1,
    0x1.ffc36050d8d98p-1, 0x1.ffc102143fae2p-1, 0x1.ffbe918c3de5ap-1, 0x1.ffbc0e5a07223p-1,
    0x1.ffb9781e1538bp-1, 0x1.ffb6ce782c473p-1, 0x1.ffb411075ed46p-1, 0x1.ffb13f6a11fadp-1,
    0x1.ffae593e019c0p-1, 0x1.ffab5e20449dcp-1, 0x1.ffa84dad512e1p-1, 0x1.ffa5278101109p-1,
    0x1.ffa1eb3695f14p-1, 0x1.ff9e9868bdbebp-1, 0x1.ff9b2eb197099p-1, 0x1.ff97adaab569ep-1,
    0x1.ff9414ed25e8bp-1, 0x1.ff906411736dep-1, 0x1.ff8c9aafab321p-1, 0x1.ff88b85f61331p-1,
    0x1.ff84bcb7b4ab5p-1, 0x1.ff80a74f548bep-1, 0x1.ff7c77bc83f68p-1, 0x1.ff782d951ebb2p-1,
    0x1.ff73c86e9dd3ap-1, 0x1.ff6f47de1be1bp-1, 0x1.ff6aab7859ab8p-1, 0x1.ff65f2d1c297ep-1,
    0x1.ff611d7e71295p-1, 0x1.ff5c2b1233779p-1, 0x1.ff571b208fa73p-1, 0x1.ff51ed3cc85efp-1,
    0x1.ff4ca0f9e139dp-1, 0x1.ff4735eaa3372p-1, 0x1.ff41aba1a125dp-1, 0x1.ff3c01b13c0cap-1,
    0x1.ff3637aba78e5p-1, 0x1.ff304d22ee487p-1, 0x1.ff2a41a8f62eap-1, 0x1.ff2414cf84df4p-1,
    0x1.ff1dc62843f31p-1, 0x1.ff175544c5487p-1, 0x1.ff10c1b687462p-1, 0x1.ff0a0b0ef919ap-1,
    0x1.ff0330df7eee1p-1, 0x1.fefc32b9761c6p-1, 0x1.fef5102e39548p-1, 0x1.feedc8cf24beep-1,
    0x1.fee65c2d9a16ap-1, 0x1.fedec9db04bc3p-1, 0x1.fed71168ddbf3p-1, 0x1.fecf3268afe03p-1,
    0x1.fec72c6c1b8b4p-1, 0x1.febeff04dac7bp-1, 0x1.feb6a9c4c5212p-1, 0x1.feae2c3dd3864p-1,
    0x1.fea58602241ebp-1, 0x1.fe9cb6a3fe17ep-1, 0x1.fe93bdb5d5680p-1, 0x1.fe8a9aca4e880p-1,
    0x1.fe814d744222fp-1, 0x1.fe77d546c0bc5p-1, 0x1.fe6e31d5164bbp-1, 0x1.fe6462b2cdceep-1,
    0x1.fe5a6773b4d11p-1, 0x1.fe503fabdee88p-1, 0x1.fe45eaefa9291p-1, 0x1.fe3b68d3bd8cbp-1,
    0x1.fe30b8ed1650fp-1, 0x1.fe25dad1014a1p-1, 0x1.fe1ace15232b6p-1, 0x1.fe0f924f7ac43p-1,
    0x1.fe04271664331p-1, 0x1.fdf88c009c0cbp-1, 0x1.fdecc0a542789p-1, 0x1.fde0c49bde42ep-1,
    0x1.fdd4977c5fe2bp-1, 0x1.fdc838df2474ep-1, 0x1.fdbba85cf8ad1p-1, 0x1.fdaee58f1bb97p-1,
    0x1.fda1f00f421d9p-1, 0x1.fd94c77798803p-1, 0x1.fd876b62c66e9p-1, 0x1.fd79db6bf1147p-1,
    0x1.fd6c172ebde92p-1, 0x1.fd5e1e4755506p-1, 0x1.fd4ff0526530ap-1, 0x1.fd418ced237e5p-1,
    0x1.fd32f3b550bb2p-1, 0x1.fd2424493a6a5p-1, 0x1.fd151e47bd7a3p-1, 0x1.fd05e15048a1ap-1,
    0x1.fcf66d02deb33p-1, 0x1.fce6c10018e46p-1, 0x1.fcd6dce9290a3p-1, 0x1.fcc6c05fdbca7p-1,
    0x1.fcb66b069ac1dp-1, 0x1.fca5dc806e9f0p-1, 0x1.fc95147101331p-1, 0x1.fc84127c9f764p-1,
    0x1.fc72d6483b829p-1, 0x1.fc615f796e82ep-1, 0x1.fc4fadb67a974p-1, 0x1.fc3dc0a64caf0p-1,
    0x1.fc2b97f07e576p-1, 0x1.fc19333d577fep-1, 0x1.fc069235d033dp-1, 0x1.fbf3b48392495p-1,
    0x1.fbe099d0fb05dp-1, 0x1.fbcd41c91cb84p-1, 0x1.fbb9ac17c0485p-1, 0x1.fba5d86966bbep-1,
    0x1.fb91c66b4ab26p-1, 0x1.fb7d75cb61d4cp-1, 0x1.fb68e6385e3cdp-1, 0x1.fb541761afd15p-1,
    0x1.fb3f08f78598ep-1, 0x1.fb29baaacf021p-1, 0x1.fb142c2d3d227p-1, 0x1.fafe5d3143eb7p-1,
    0x1.fae84d6a1b55bp-1, 0x1.fad1fc8bc0820p-1, 0x1.fabb6a4af6d1dp-1, 0x1.faa4965d48f5ap-1,
    0x1.fa8d807909f1fp-1, 0x1.fa762855561aap-1, 0x1.fa5e8daa14060p-1, 0x1.fa46b02ff5759p-1,
    0x1.fa2e8fa078362p-1, 0x1.fa162bb5e6f75p-1, 0x1.f9fd842b5a193p-1, 0x1.f9e498bcb8720p-1,
    0x1.f9cb6926b80a2p-1, 0x1.f9b1f526ded0cp-1, 0x1.f9983c7b8345ep-1, 0x1.f97e3ee3cd1e4p-1,
    0x1.f963fc1fb5dc4p-1, 0x1.f94973f00962ep-1, 0x1.f92ea616667e8p-1, 0x1.f91392553f668p-1,
    0x1.f8f8386fda366p-1, 0x1.f8dc982a515f5p-1, 0x1.f8c0b1499410dp-1, 0x1.f8a48393669a8p-1,
    0x1.f8880ece62c58p-1, 0x1.f86b52c1f826ep-1, 0x1.f84e4f366c68dp-1, 0x1.f83103f4db8edp-1,
    0x1.f81370c738301p-1, 0x1.f7f595784bab9p-1, 0x1.f7d771d3b6556p-1, 0x1.f7b905a5ef9b7p-1,
    0x1.f79a50bc4624ep-1, 0x1.f77b52e4dfe8ap-1, 0x1.f75c0beeba3e9p-1, 0x1.f73c7ba9a9e8dp-1,
    0x1.f71ca1e65b16fp-1, 0x1.f6fc7e7651621p-1, 0x1.f6dc112be7c2ap-1, 0x1.f6bb59da507f8p-1,
    0x1.f69a58559516cp-1, 0x1.f6790c7296202p-1, 0x1.f65776070b292p-1, 0x1.f63594e9828b2p-1,
    0x1.f61368f1613b1p-1, 0x1.f5f0f1f6e293ep-1, 0x1.f5ce2fd31819bp-1, 0x1.f5ab225fe9390p-1,
    0x1.f587c97812fdep-1, 0x1.f56424f727c7fp-1, 0x1.f54034b98ef66p-1, 0x1.f51bf89c84908p-1,
    0x1.f4f7707e18e76p-1, 0x1.f4d29c3d3032cp-1, 0x1.f4ad7bb98228ep-1, 0x1.f4880ed39990ap-1,
    0x1.f462556cd3cefp-1, 0x1.f43c4f67606edp-1, 0x1.f415fca640a50p-1, 0x1.f3ef5d0d46cdep-1,
    0x1.f3c8708115e7ap-1, 0x1.f3a136e721067p-1, 0x1.f379b025aac5bp-1, 0x1.f351dc23c4b28p-1,
    0x1.f329bac94eb3bp-1, 0x1.f3014bfef66c5p-1, 0x1.f2d88fae3699dp-1, 0x1.f2af85c1566e7p-1,
    0x1.f2862e2368e72p-1, 0x1.f25c88c04c1d6p-1, 0x1.f2329584a894ep-1, 0x1.f208545df0851p-1,
    0x1.f1ddc53a5f1f9p-1, 0x1.f1b2e808f7d1dp-1, 0x1.f187bcb985836p-1, 0x1.f15c433c99d0cp-1,
    0x1.f1307b838c421p-1, 0x1.f1046580797ebp-1, 0x1.f0d80126427d4p-1, 0x1.f0ab4e688baf8p-1,
    0x1.f07e4d3bbc2c6p-1, 0x1.f050fd94fcd57p-1, 0x1.f0235f6a37797p-1, 0x1.eff572b215f42p-1,
    0x1.efc73764014a6p-1, 0x1.ef98ad7820c40p-1, 0x1.ef69d4e759020p-1, 0x1.ef3aadab4b123p-1,
    0x1.ef0b37be537ffp-1, 0x1.eedb731b89628p-1, 0x1.eeab5fbebd67ep-1, 0x1.ee7afda478ddbp-1,
    0x1.ee4a4cc9fcb7bp-1, 0x1.ee194d2d4092ep-1, 0x1.ede7feccf1b6bp-1, 0x1.edb661a872148p-1,
    0x1.ed8475bfd742ep-1, 0x1.ed523b13e9790p-1, 0x1.ed1fb1a62285ep-1, 0x1.ececd978acc66p-1,
    0x1.ecb9b28e62194p-1, 0x1.ec863ceacad06p-1, 0x1.ec5278921ca0ap-1, 0x1.ec1e658939903p-1,
    0x1.ebea03d5aee1dp-1, 0x1.ebb5537db3ff2p-1, 0x1.eb80548829615p-1, 0x1.eb4b06fc9777cp-1,
    0x1.eb156ae32d8c7p-1, 0x1.eadf8044c0a83p-1, 0x1.eaa9472aca745p-1, 0x1.ea72bf9f681a8p-1,
    0x1.ea3be9ad59248p-1, 0x1.ea04c55ffe595p-1, 0x1.e9cd52c358994p-1, 0x1.e99591e407b98p-1,
    0x1.e95d82cf495d4p-1, 0x1.e9252592f7ce2p-1, 0x1.e8ec7a3d88d46p-1, 0x1.e8b380de0c8c4p-1,
    0x1.e87a39842c3b8p-1, 0x1.e840a4402925ep-1, 0x1.e806c122db605p-1, 0x1.e7cc903db0a33p-1,
    0x1.e79211a2ab1b9p-1, 0x1.e7574564603cdp-1, 0x1.e71c2b95f78f4p-1, 0x1.e6e0c44b29809p-1,
    0x1.e6a50f983e319p-1, 0x1.e6690d920c443p-1, 0x1.e62cbe4df7a8dp-1, 0x1.e5f021e1f06b6p-1,
    0x1.e5b33864717ecp-1, 0x1.e57601ec7f894p-1, 0x1.e5387e91a7af7p-1, 0x1.e4faae6bfe5f2p-1,
    0x1.e4bc91941e19fp-1, 0x1.e47e2823263ffp-1, 0x1.e43f7232b9d89p-1, 0x1.e4006fdcfe5d7p-1,
    0x1.e3c1213c9a831p-1, 0x1.e381866cb5028p-1, 0x1.e3419f88f362dp-1, 0x1.e3016cad78c1ap-1,
    0x1.e2c0edf6e49c7p-1, 0x1.e28023825199ep-1, 0x1.e23f0d6d54524p-1, 0x1.e1fdabd5fa193p-1,
    0x1.e1bbfedac7c66p-1, 0x1.e17a069ab87f1p-1, 0x1.e137c3353c7f6p-1, 0x1.e0f534ca37e44p-1,
    0x1.e0b25b7a01748p-1, 0x1.e06f3765616bcp-1, 0x1.e02bc8ad90446p-1, 0x1.dfe80f7435821p-1,
    0x1.dfa40bdb667cdp-1, 0x1.df5fbe05a52c8p-1, 0x1.df1b2615def45p-1, 0x1.ded6442f6b6f4p-1,
    0x1.de9118760b3c5p-1, 0x1.de4ba30de6cc0p-1, 0x1.de05e41b8d2d9p-1, 0x1.ddbfdbc3f2dd5p-1,
    0x1.dd798a2c70934p-1, 0x1.dd32ef7ac2127p-1, 0x1.dcec0bd504f8bp-1, 0x1.dca4df61b78f3p-1,
    0x1.dc5d6a47b79bep-1, 0x1.dc15acae4132cp-1, 0x1.dbcda6bced895p-1, 0x1.db85589bb1c8dp-1,
    0x1.db3cc272dde39p-1, 0x1.daf3e46b1b68cp-1, 0x1.daaabead6c5a6p-1, 0x1.da6151632a046p-1,
    0x1.da179cb603d30p-1, 0x1.d9cda0cffe2b8p-1, 0x1.d9835ddb71459p-1, 0x1.d938d4030804cp-1,
    0x1.d8ee0371bed38p-1, 0x1.d8a2ec52e27fap-1, 0x1.d8578ed20f166p-1, 0x1.d80beb1b2ec2ep-1,
    0x1.d7c0015a78accp-1, 0x1.d773d1bc6fd82p-1, 0x1.d7275c6de2068p-1, 0x1.d6daa19be698dp-1,
    0x1.d68da173dd729p-1, 0x1.d6405c236dddfp-1, 0x1.d5f2d1d885712p-1, 0x1.d5a502c156f4fp-1,
    0x1.d556ef0c594c1p-1, 0x1.d50896e8465c2p-1, 0x1.d4b9fa8419f75p-1, 0x1.d46b1a0f10c80p-1,
    0x1.d41bf5b8a73ccp-1, 0x1.d3cc8db09875ap-1, 0x1.d37ce226dd339p-1, 0x1.d32cf34baac7ep-1,
    0x1.d2dcc14f72063p-1, 0x1.d28c4c62de364p-1, 0x1.d23b94b6d408ap-1, 0x1.d1ea9a7c708b0p-1,
    0x1.d1995de5081fdp-1, 0x1.d147df222574cp-1, 0x1.d0f61e65887cfp-1, 0x1.d0a41be1256b3p-1,
    0x1.d051d7c723adap-1, 0x1.cfff5249dceaep-1, 0x1.cfac8b9bdc015p-1, 0x1.cf5983efdc066p-1,
    0x1.cf063b78c7487p-1, 0x1.ceb2b269b6511p-1, 0x1.ce5ee8f5eeea2p-1, 0x1.ce0adf50e322cp-1,
    0x1.cdb695ae3056ap-1, 0x1.cd620c419e369p-1, 0x1.cd0d433f1dd29p-1, 0x1.ccb83adac8a56p-1,
    0x1.cc62f348dfa12p-1, 0x1.cc0d6cbdca3ddp-1, 0x1.cbb7a76e15896p-1, 0x1.cb61a38e73392p-1,
    0x1.cb0b6153b8bc0p-1, 0x1.cab4e0f2de500p-1, 0x1.ca5e22a0fe171p-1, 0x1.ca072693532f0p-1,
    0x1.c9afecff38ca3p-1, 0x1.c958761a294a2p-1, 0x1.c900c219bd5b7p-1, 0x1.c8a8d133ab134p-1,
    0x1.c850a39dc50e9p-1, 0x1.c7f8398df9920p-1, 0x1.c79f933a51ad0p-1, 0x1.c746b0d8f05cfp-1,
    0x1.c6ed92a011b23p-1, 0x1.c69438c609f76p-1, 0x1.c63aa38144d95p-1, 0x1.c5e0d30844917p-1,
    0x1.c586c791a110ap-1, 0x1.c52c8154072cfp-1, 0x1.c4d2008637cf7p-1, 0x1.c477455f07257p-1,
    0x1.c41c50155bd14p-1, 0x1.c3c120e02e1e0p-1, 0x1.c365b7f68734fp-1, 0x1.c30a158f80532p-1,
    0x1.c2ae39e242024p-1, 0x1.c25225260351bp-1, 0x1.c1f5d7920912ap-1, 0x1.c199515da513dp-1,
    0x1.c13c92c03560cp-1, 0x1.c0df9bf12381bp-1, 0x1.c0826d27e3bcfp-1, 0x1.c025069bf45a0p-1,
    0x1.bfc76884dce6cp-1, 0x1.bf69931a2d7d4p-1, 0x1.bf0b86937e0c5p-1, 0x1.bead43286da07p-1,
    0x1.be4ec910a1af5p-1, 0x1.bdf01883c5642p-1, 0x1.bd9131b988ee6p-1, 0x1.bd3214e9a0d14p-1,
    0x1.bcd2c24bc5350p-1, 0x1.bc733a17b13a6p-1, 0x1.bc137c85224efp-1, 0x1.bbb389cbd782fp-1,
    0x1.bb53622390e1ap-1, 0x1.baf305c40eca1p-1, 0x1.ba9274e5114a1p-1, 0x1.ba31afbe577a8p-1,
    0x1.b9d0b6879eddep-1, 0x1.b96f8978a2beep-1, 0x1.b90e28c91b921p-1, 0x1.b8ac94b0be58bp-1,
    0x1.b84acd673c045p-1, 0x1.b7e8d32440dccp-1, 0x1.b786a61f73e76p-1, 0x1.b724469076503p-1,
    0x1.b6c1b4aee2d38p-1, 0x1.b65ef0b24d2a6p-1, 0x1.b5fbfad24177fp-1, 0x1.b598d34643b81p-1,
    0x1.b5357a45cf2fep-1, 0x1.b4d1f00855dfcp-1, 0x1.b46e34c53ff71p-1, 0x1.b40a48b3eb486p-1,
    0x1.b3a62c0baac0fp-1, 0x1.b341df03c5dfep-1, 0x1.b2dd61d3782fep-1, 0x1.b278b4b1f0c25p-1,
    0x1.b213d7d651ab5p-1, 0x1.b1aecb77af802p-1, 0x1.b1498fcd10d63p-1, 0x1.b0e4250d6dc41p-1,
    0x1.b07e8b6faf63ap-1, 0x1.b018c32aaf563p-1, 0x1.afb2cc7537496p-1, 0x1.af4ca786007dfp-1,
    0x1.aee65493b34fcp-1, 0x1.ae7fd3d4e6bffp-1, 0x1.ae1925801ffecp-1, 0x1.adb249cbd1f90p-1,
    0x1.ad4b40ee5ce58p-1, 0x1.ace40b1e0dd44p-1, 0x1.ac7ca8911e3f4p-1, 0x1.ac15197db39c3p-1,
    0x1.abad5e19def06p-1, 0x1.ab45769b9c655p-1, 0x1.aadd6338d2defp-1, 0x1.aa75242753937p-1,
    0x1.aa0cb99cd9a3ap-1, 0x1.a9a423cf09b60p-1, 0x1.a93b62f371921p-1, 0x1.a8d2773f87bd8p-1,
    0x1.a86960e8ab1a0p-1, 0x1.a800202422861p-1, 0x1.a796b5271c7d4p-1, 0x1.a72d2026aebaep-1,
    0x1.a6c36157d5dd5p-1, 0x1.a65978ef750bfp-1, 0x1.a5ef6722559c3p-1, 0x1.a5852c2526ba6p-1,
    0x1.a51ac82c7d120p-1, 0x1.a4b03b6cd277cp-1, 0x1.a445861a8595cp-1, 0x1.a3daa869d9977p-1,
    0x1.a36fa28ef5d87p-1, 0x1.a30474bde5931p-1, 0x1.a2991f2a97916p-1, 0x1.a22da208dddecp-1,
    0x1.a1c1fd8c6d7afp-1, 0x1.a15631e8de0e9p-1, 0x1.a0ea3f51a99fep-1, 0x1.a07e25fa2c4a5p-1,
    0x1.a011e615a3f5bp-1, 0x1.9fa57fd7300ffp-1, 0x1.9f38f371d146ep-1, 0x1.9ecc41186943bp-1,
    0x1.9e5f68fdba682p-1, 0x1.9df26b54678bdp-1, 0x1.9d85484ef3bb6p-1, 0x1.9d18001fc1f8cp-1,
    0x1.9caa92f914fc9p-1, 0x1.9c3d010d0ef7ep-1, 0x1.9bcf4a8db158ep-1, 0x1.9b616facdc8f0p-1,
    0x1.9af3709c4fd07p-1, 0x1.9a854d8da8e1fp-1, 0x1.9a1706b263de3p-1, 0x1.99a89c3bdaff5p-1,
    0x1.993a0e5b4668bp-1, 0x1.98cb5d41bbf37p-1, 0x1.985c89202ef98p-1, 0x1.97ed92277023ep-1,
    0x1.977e78882d38fp-1, 0x1.970f3c72f0ec3p-1, 0x1.969fde1822aeep-1, 0x1.96305da80681cp-1,
    0x1.95c0bb52bcc7ep-1, 0x1.9550f748421a4p-1, 0x1.94e111b86f1c7p-1, 0x1.94710ad2f8530p-1,
    0x1.9400e2c76df99p-1, 0x1.939099c53bdb3p-1, 0x1.93202ffba92b0p-1, 0x1.92afa599d85dep-1,
    0x1.923efacec7054p-1, 0x1.91ce2fc94dab0p-1, 0x1.915d44b81fadfp-1, 0x1.90ec39c9cb1fap-1,
    0x1.907b0f2cb8a2fp-1, 0x1.9009c50f2b4b6p-1, 0x1.8f985b9f407e2p-1, 0x1.8f26d30aefd2ap-1,
    0x1.8eb52b800af59p-1, 0x1.8e43652c3d8bfp-1, 0x1.8dd1803d0d16fp-1, 0x1.8d5f7cdfd8d97p-1,
    0x1.8ced5b41d9bd7p-1, 0x1.8c7b1b90223b2p-1, 0x1.8c08bdf79e40bp-1, 0x1.8b9642a5131a6p-1,
    0x1.8b23a9c51f5cbp-1, 0x1.8ab0f3843acdcp-1, 0x1.8a3e200eb6513p-1, 0x1.89cb2f90bbd3ap-1,
    0x1.895822364e37cp-1, 0x1.88e4f82b4943bp-1, 0x1.8871b19b618fcp-1, 0x1.87fe4eb224756p-1,
    0x1.878acf9af7ff4p-1, 0x1.871734811adaap-1, 0x1.86a37d8fa4482p-1, 0x1.862faaf1840f0p-1,
    0x1.85bbbcd1826fdp-1, 0x1.8547b35a4018dp-1, 0x1.84d38eb6361a6p-1, 0x1.845f4f0fb5dccp-1,
    0x1.83eaf490e9162p-1, 0x1.83767f63d1c1ep-1, 0x1.8301efb24a184p-1, 0x1.828d45a60486ap-1,
    0x1.821881688ba91p-1, 0x1.81a3a32342441p-1, 0x1.812eaaff633f5p-1, 0x1.80b9992601a0fp-1,
    0x1.80446dc008898p-1, 0x1.7fcf28f63b312p-1, 0x1.7f59caf134e46p-1, 0x1.7ee453d96902dp-1,
    0x1.7e6ec3d722fdcp-1, 0x1.7df91b1286574p-1, 0x1.7d8359b38ea2ep-1, 0x1.7d0d7fe20f868p-1,
    0x1.7c978dc5b4bacp-1, 0x1.7c218386020e7p-1, 0x1.7bab614a53683p-1, 0x1.7b352739dcca6p-1,
    0x1.7abed57baa56fp-1, 0x1.7a486c36a0541p-1, 0x1.79d1eb917b311p-1, 0x1.795b53b2cf8c9p-1,
    0x1.78e4a4c10a3acp-1, 0x1.786ddee2704c4p-1, 0x1.77f7023d1f165p-1, 0x1.77800ef70c39fp-1,
    0x1.7709053605adap-1, 0x1.7691e51fb1c67p-1, 0x1.761aaed98f418p-1, 0x1.75a36288f54edp-1,
    0x1.752c0053139c9p-1, 0x1.74b4885cf261cp-1, 0x1.743cfacb726b8p-1, 0x1.73c557c34d287p-1,
    0x1.734d9f6914b74p-1, 0x1.72d5d1e133f32p-1, 0x1.725def4fee82dp-1, 0x1.71e5f7d960e6ep-1,
    0x1.716deba180895p-1, 0x1.70f5cacc1bcd1p-1, 0x1.707d957cda1e9p-1, 0x1.70054bd73c042p-1,
    0x1.6f8cedfe9b2f5p-1, 0x1.6f147c162a8f1p-1, 0x1.6e9bf640f6616p-1, 0x1.6e235ca1e4460p-1,
    0x1.6daaaf5bb3523p-1, 0x1.6d31ee90fc23ap-1, 0x1.6cb91a6430f50p-1, 0x1.6c4032f79db21p-1,
    0x1.6bc7386d680d5p-1, 0x1.6b4e2ae78f949p-1, 0x1.6ad50a87edc7ap-1, 0x1.6a5bd770362dcp-1,
    0x1.69e291c1f66d8p-1, 0x1.6969399e9662ap-1, 0x1.68efcf275836ap-1, 0x1.6876527d58785p-1,
    0x1.67fcc3c18e340p-1, 0x1.67832314cb0d0p-1, 0x1.67097097bb564p-1, 0x1.668fac6ae62bcp-1,
    0x1.6615d6aead8d8p-1, 0x1.659bef834e78dp-1, 0x1.6521f708e103ap-1, 0x1.64a7ed5f5877dp-1,
    0x1.642dd2a6836e5p-1, 0x1.63b3a6fe0beb0p-1, 0x1.63396a8577795p-1, 0x1.62bf1d5c2748cp-1,
    0x1.6244bfa158498p-1, 0x1.61ca5174234a5p-1, 0x1.614fd2f37d15dp-1, 0x1.60d5443e36907p-1,
    0x1.605aa572fcd75p-1, 0x1.5fdff6b0595e6p-1, 0x1.5f653814b20fap-1, 0x1.5eea69be496aap-1,
    0x1.5e6f8bcb3ea3fp-1, 0x1.5df49e598dc5bp-1, 0x1.5d79a1870fcedp-1, 0x1.5cfe95717ad4fp-1,
    0x1.5c837a3662240p-1, 0x1.5c084ff33660fp-1, 0x1.5b8d16c545aa0p-1, 0x1.5b11cec9bbb96p-1,
    0x1.5a96781da206fp-1, 0x1.5a1b12dddfeaep-1, 0x1.599f9f273ac02p-1, 0x1.59241d165607dp-1,
    0x1.58a88cc7b38c2p-1, 0x1.582cee57b3843p-1, 0x1.57b141e294b76p-1, 0x1.5735878474a21p-1,
    0x1.56b9bf594f999p-1, 0x1.563de97d00f0cp-1, 0x1.55c2060b431d2p-1, 0x1.5546151fafdbfp-1,
    0x1.54ca16d5c0574p-1, 0x1.544e0b48cd4c0p-1, 0x1.53d1f2940f2f8p-1, 0x1.5355ccd29e55dp-1,
    0x1.52d99a1f73183p-1, 0x1.525d5a9565fb2p-1, 0x1.51e10e4f2fd5dp-1, 0x1.5164b56769f8ep-1,
    0x1.50e84ff88e55ap-1, 0x1.506bde1cf7a5dp-1, 0x1.4fef5feee192ep-1, 0x1.4f72d58868de6p-1,
    0x1.4ef63f038b8a1p-1, 0x1.4e799c7a28ff9p-1, 0x1.4dfcee06023a4p-1, 0x1.4d8033c0b9eedp-1,
    0x1.4d036dc3d4b4bp-1, 0x1.4c869c28b92f6p-1, 0x1.4c09bf08b037ap-1, 0x1.4b8cd67ce5053p-1,
    0x1.4b0fe29e65581p-1, 0x1.4a92e38621a33p-1, 0x1.4a15d94ced361p-1, 0x1.4998c40b7e675p-1,
    0x1.491ba3da6ebf0p-1, 0x1.489e78d23b215p-1, 0x1.4821430b43f9ap-1, 0x1.47a4029dcd655p-1,
    0x1.4726b7a1ff5f0p-1, 0x1.46a9622fe5e9ep-1, 0x1.462c025f713d9p-1, 0x1.45ae984875f12p-1,
    0x1.45312402ad27ap-1, 0x1.44b3a5a5b4bbcp-1, 0x1.44361d490f6bfp-1, 0x1.43b88b0425071p-1,
    0x1.433aeeee42988p-1, 0x1.42bd491e9a94ep-1, 0x1.423f99ac4506fp-1, 0x1.41c1e0ae3fbc7p-1,
    0x1.41441e3b6e730p-1, 0x1.40c6526a9b05bp-1, 0x1.40487d527599fp-1, 0x1.3fca9f0994cd4p-1,
    0x1.3f4cb7a675e2cp-1, 0x1.3ecec73f7cf0fp-1, 0x1.3e50cdeaf50f7p-1, 0x1.3dd2cbbf10853p-1,
    0x1.3d54c0d1e8f68p-1, 0x1.3cd6ad397f933p-1, 0x1.3c58910bbd44fp-1, 0x1.3bda6c5e72de2p-1,
    0x1.3b5c3f475947dp-1, 0x1.3ade09dc11b11p-1, 0x1.3a5fcc3225bd8p-1, 0x1.39e1865f07b42p-1,
    0x1.3963387812aecp-1, 0x1.38e4e2928ac8cp-1, 0x1.386684c39d4e9p-1, 0x1.37e81f2060ed6p-1,
    0x1.3769b1bdd5e1bp-1, 0x1.36eb3cb0e6280p-1, 0x1.366cc00e65abbp-1, 0x1.35ee3beb12771p-1,
    0x1.356fb05b94e3ap-1, 0x1.34f11d747fc93p-1, 0x1.3472834a50af0p-1, 0x1.33f3e1f16ffabp-1,
    0x1.3375397e3121fp-1, 0x1.32f68a04d2d9ap-1, 0x1.3277d3997f46ap-1, 0x1.31f916504c2ebp-1,
    0x1.317a523d3b28bp-1, 0x1.30fb877439cd5p-1, 0x1.307cb60921e80p-1, 0x1.2ffdde0fb9a7ap-1,
    0x1.2f7eff9bb3cfap-1, 0x1.2f001ac0afe8bp-1, 0x1.2e812f923a723p-1, 0x1.2e023e23cd130p-1,
    0x1.2d834688cecafp-1, 0x1.2d0448d494246p-1, 0x1.2c85451a5f64cp-1, 0x1.2c063b6d60beep-1,
    0x1.2b872be0b683ep-1, 0x1.2b0816876d556p-1, 0x1.2a88fb7480564p-1, 0x1.2a09dabad95d4p-1,
    0x1.298ab46d51262p-1, 0x1.290b889eaf83ep-1, 0x1.288c5761ab926p-1, 0x1.280d20c8ebe86p-1,
    0x1.278de4e706c9dp-1, 0x1.270ea3ce82596p-1, 0x1.268f5d91d4cb1p-1, 0x1.2610124364965p-1,
    0x1.2590c1f588a7ep-1, 0x1.25116cba88948p-1, 0x1.249212a49ccb3p-1, 0x1.2412b3c5eec7ap-1,
    0x1.2393503099447p-1, 0x1.2313e7f6a86ddp-1, 0x1.22947b2a1a142p-1, 0x1.221509dcddde7p-1,
    0x1.21959420d57d2p-1, 0x1.21161a07d4dc9p-1, 0x1.20969ba3a2580p-1, 0x1.20171905f6ec2p-1,
    0x1.1f9792407e69dp-1, 0x1.1f180764d7a99p-1, 0x1.1e98788494bdep-1, 0x1.1e18e5b13b25fp-1,
    0x1.1d994efc44012p-1, 0x1.1d19b4771c420p-1, 0x1.1c9a163324e12p-1, 0x1.1c1a7441b3103p-1,
    0x1.1b9aceb4106d3p-1, 0x1.1b1b259b7b35cp-1, 0x1.1a9b7909267a1p-1, 0x1.1a1bc90e3a4ffp-1,
    0x1.199c15bbd406ep-1, 0x1.191c5f23065a6p-1, 0x1.189ca554d9a5dp-1, 0x1.181ce8624c180p-1,
    0x1.179d285c51e5cp-1, 0x1.171d6553d57e1p-1, 0x1.169d9f59b7bd4p-1, 0x1.161dd67ed0208p-1,
    0x1.159e0ad3ecf96p-1, 0x1.151e3c69d3a11p-1, 0x1.149e6b5140ac6p-1, 0x1.141e979ae81eep-1,
    0x1.139ec157759efp-1, 0x1.131ee8978ca8cp-1, 0x1.129f0d6bc8c2ap-1, 0x1.121f2fe4bdb05p-1,
    0x1.119f5012f7a67p-1, 0x1.111f6e06fb7eep-1, 0x1.109f89d146ebcp-1, 0x1.101fa38250abdp-1,
    0x1.0f9fbb2a88bdbp-1, 0x1.0f1fd0da5893cp-1, 0x1.0e9fe4a223489p-1, 0x1.0e1ff69245d19p-1,
    0x1.0da006bb1733ep-1, 0x1.0d20152ce8b7ap-1, 0x1.0ca021f8061c1p-1, 0x1.0c202d2cb5cb5p-1,
    0x1.0ba036db390e2p-1, 0x1.0b203f13cc402p-1, 0x1.0aa045e6a703ap-1, 0x1.0a204b63fc753p-1,
    0x1.09a04f9bfb601p-1, 0x1.0920529ece71ep-1, 0x1.08a0547c9c6e9p-1, 0x1.082055458864bp-1,
    0x1.07a05509b1e0bp-1, 0x1.072053d93521ep-1, 0x1.06a051c42b4dap-1, 0x1.06204edaaaa37p-1,
    0x1.05a04b2cc6b1dp-1, 0x1.052046ca9088fp-1, 0x1.04a041c416efdp-1, 0x1.04203c296697cp-1,
    0x1.03a0360a8a508p-1, 0x1.03202f778b3c8p-1, 0x1.02a0288071048p-1, 0x1.02202135420c4p-1,
    0x1.01a019a603a5ep-1, 0x1.012011e2ba464p-1, 0x1.00a009fb69b93p-1, 0x1.0020020015555p-1,
    0x1.ff3ff40180604p-2, 0x1.fe3fe41adaa43p-2, 0x1.fd3fd46c3fd5bp-2, 0x1.fc3fc515b70a2p-2,
    0x1.fb3fb6374874fp-2, 0x1.fa3fa7f0fdd07p-2, 0x1.f93f9a62e2c56p-2, 0x1.f83f8dad05533p-2,
    0x1.f73f81ef76381p-2, 0x1.f63f774a49591p-2, 0x1.f53f6ddd962a8p-2, 0x1.f43f65c978177p-2,
    0x1.f33f5f2e0eea4p-2, 0x1.f23f5a2b7f34cp-2, 0x1.f13f56e1f2b77p-2, 0x1.f03f557198ca7p-2,
    0x1.ef3f55faa6c5ap-2, 0x1.ee3f589d58678p-2, 0x1.ed3f5d79f03e2p-2, 0x1.ec3f64b0b80efp-2,
    0x1.eb3f6e62013ebp-2, 0x1.ea3f7aae25391p-2, 0x1.e93f89b585d94p-2, 0x1.e83f9b988dd0bp-2,
    0x1.e73fb077b110cp-2, 0x1.e63fc8736d305p-2, 0x1.e53fe3ac49d60p-2, 0x1.e4400242d91dap-2,
    0x1.e3402457b801bp-2, 0x1.e2404a0b8ec29p-2, 0x1.e140737f114ddp-2, 0x1.e040a0d2ffa6ap-2,
    0x1.df40d228264ccp-2, 0x1.de41079f5ea48p-2, 0x1.dd4141598f5e3p-2, 0x1.dc417f77acddbp-2,
    0x1.db41c21ab9a20p-2, 0x1.da420963c6ad1p-2, 0x1.d9425573f3e9fp-2, 0x1.d842a66c7095dp-2,
    0x1.d742fc6e7ba66p-2, 0x1.d643579b64317p-2, 0x1.d543b81489d3fp-2, 0x1.d4441dfb5d191p-2,
    0x1.d34489715fe23p-2, 0x1.d244fa9825cd5p-2, 0x1.d1457191549c2p-2, 0x1.d045ee7ea49b3p-2,
    0x1.cf467181e108cp-2, 0x1.ce46fabce87c8p-2, 0x1.cd478a51ad4c9p-2, 0x1.cc48206235f6ap-2,
    0x1.cb48bd109d847p-2, 0x1.ca49607f13f46p-2, 0x1.c94a0acfde9eep-2, 0x1.c84abc25589d2p-2,
    0x1.c74b74a1f3303p-2, 0x1.c64c34683626dp-2, 0x1.c54cfb9ac043ep-2, 0x1.c44dca5c47a4fp-2,
    0x1.c34ea0cf9a287p-2, 0x1.c24f7f179dd32p-2, 0x1.c150655751377p-2, 0x1.c05153b1cbda5p-2,
    0x1.bf524a4a3e990p-2, 0x1.be534943f4115p-2, 0x1.bd5450c251038p-2, 0x1.bc5560e8d4bb3p-2,
    0x1.bb5679db1972fp-2, 0x1.ba579bbcd4bafp-2, 0x1.b958c6b1d7de1p-2, 0x1.b859fade10471p-2,
    0x1.b75b386587e5cp-2, 0x1.b65c7f6c65947p-2, 0x1.b55dd016ed7cep-2, 0x1.b45f2a89817cep-2,
    0x1.b3608ee8a18bdp-2, 0x1.b261fd58ec1eap-2, 0x1.b16375ff1e8cdp-2, 0x1.b064f90015756p-2,
    0x1.af668680cd226p-2, 0x1.ae681ea661edep-2, 0x1.ad69c19610a60p-2, 0x1.ac6b6f7536f13p-2,
    0x1.ab6d286953b18p-2, 0x1.aa6eec9807698p-2, 0x1.a970bc27149eep-2, 0x1.a872973c603f2p-2,
    0x1.a7747dfdf2026p-2, 0x1.a6767091f4cebp-2, 0x1.a5786f1eb71bep-2, 0x1.a47a79caab558p-2,
    0x1.a37c90bc683f6p-2, 0x1.a27eb41aa9571p-2, 0x1.a180e40c4f371p-2, 0x1.a08320b85ff98p-2,
    0x1.9f856a460799fp-2, 0x1.9e87c0dc98584p-2, 0x1.9d8a24a38b1aap-2, 0x1.9c8c95c27fcefp-2,
    0x1.9b8f14613dcd6p-2, 0x1.9a91a0a7b4394p-2, 0x1.99943abdfa62cp-2, 0x1.9896e2cc5028ap-2,
    0x1.979998fb1e58ap-2, 0x1.969c5d72f7110p-2, 0x1.959f305c9620ep-2, 0x1.94a211e0e1697p-2,
    0x1.93a50228e93d9p-2, 0x1.92a8015de8c27p-2, 0x1.91ab0fa9464fep-2, 0x1.90ae2d3493cfcp-2,
    0x1.8fb15a298f1e1p-2, 0x1.8eb496b22267ap-2, 0x1.8db7e2f8648a8p-2, 0x1.8cbb3f2699745p-2,
    0x1.8bbeab6732814p-2, 0x1.8ac227e4ceda6p-2, 0x1.89c5b4ca3bd4fp-2, 0x1.88c95242754fap-2,
    0x1.87cd0078a611bp-2, 0x1.86d0bf9828278p-2, 0x1.85d48fcc8540bp-2, 0x1.84d87141770d9p-2,
    0x1.83dc6422e79c4p-2, 0x1.82e0689cf1b57p-2, 0x1.81e47edbe1385p-2, 0x1.80e8a70c33786p-2,
    0x1.7fece15a97982p-2, 0x1.7ef12df3eee59p-2, 0x1.7df58d054d365p-2, 0x1.7cf9febbf941bp-2,
    0x1.7bfe83456cfcep-2, 0x1.7b031acf55f54p-2, 0x1.7a07c58795aabp-2, 0x1.790c839c41eaap-2,
    0x1.7811553ba5292p-2, 0x1.77163a943edb7p-2, 0x1.761b33d4c3d03p-2, 0x1.7520412c1e89cp-2,
    0x1.742562c96f962p-2, 0x1.732a98dc0de82p-2, 0x1.722fe393872eep-2, 0x1.7135431fa02e2p-2,
    0x1.703ab7b05515ep-2, 0x1.6f404175d9d8cp-2, 0x1.6e45e0a09a845p-2, 0x1.6d4b95613b968p-2,
    0x1.6c515fe89a53ep-2, 0x1.6b574067cd1e4p-2, 0x1.6a5d371023c98p-2, 0x1.6963441327f14p-2,
    0x1.686967a29d4d3p-2, 0x1.676fa1f08205ep-2, 0x1.6675f32f0f08bp-2, 0x1.657c5b90b85bcp-2,
    0x1.6482db482d70cp-2, 0x1.6389728859784p-2, 0x1.6290218463b47p-2, 0x1.6196e86fafcafp-2,
    0x1.609dc77dde169p-2, 0x1.5fa4bee2cbf8ap-2, 0x1.5eabced2942a7p-2, 0x1.5db2f7818f0cdp-2,
    0x1.5cba392452f91p-2, 0x1.5bc193efb4909p-2, 0x1.5ac90818c70afp-2, 0x1.59d095d4dc86ap-2,
    0x1.58d83d5986556p-2, 0x1.57dffedc954b8p-2, 0x1.56e7da941a0c6p-2, 0x1.55efd0b66557ep-2,
    0x1.54f7e17a0856cp-2, 0x1.54000d15d4e6ep-2, 0x1.530853c0dde5fp-2, 0x1.5210b5b2777d2p-2,
    0x1.51193322376c2p-2, 0x1.5021cc47f5518p-2, 0x1.4f2a815bcaf5ep-2, 0x1.4e33529614941p-2,
    0x1.4d3c402f7121bp-2, 0x1.4c454a60c296ep-2, 0x1.4b4e71632e363p-2, 0x1.4a57b5701cd2dp-2,
    0x1.496116c13b177p-2, 0x1.486a959079cb4p-2, 0x1.477432180e17bp-2, 0x1.467dec9271cd0p-2,
    0x1.4587c53a63a5ap-2, 0x1.4491bc4ae78a3p-2, 0x1.439bd1ff46d40p-2, 0x1.42a60693108fcp-2,
    0x1.41b05a4219bd8p-2, 0x1.40bacd487d94dp-2, 0x1.3fc55fe29dc17p-2, 0x1.3ed0124d22a4fp-2,
    0x1.3ddae4c4fb95ep-2, 0x1.3ce5d7875f1d2p-2, 0x1.3bf0ead1cb34fp-2, 0x1.3afc1ee20584dp-2,
    0x1.3a0773f61b9e8p-2, 0x1.3912ea4c6339bp-2, 0x1.381e82237a6ebp-2, 0x1.372a3bba47f14p-2,
    0x1.3636174ffb49ap-2, 0x1.354215240d0dap-2, 0x1.344e35763f193p-2, 0x1.335a78869cc4fp-2,
    0x1.3266de957b1ddp-2, 0x1.317367e3791a3p-2, 0x1.308014b17fcfbp-2, 0x1.2f8ce540c2a6fp-2,
    0x1.2e99d9d2bf8f7p-2, 0x1.2da6f2a93f32ep-2, 0x1.2cb4300655262p-2, 0x1.2bc1922c601b9p-2,
    0x1.2acf195e0a124p-2, 0x1.29dcc5de4886dp-2, 0x1.28ea97f05ca14p-2, 0x1.27f88fd7d3633p-2,
    0x1.2706add885d48p-2, 0x1.2614f23699302p-2, 0x1.25235d367f0f1p-2, 0x1.2431ef1cf592ap-2,
    0x1.2340a82f078e0p-2, 0x1.224f88b20caf2p-2, 0x1.215e90eba9a63p-2, 0x1.206dc121d04c8p-2,
    0x1.1f7d199abfca2p-2, 0x1.1e8c9a9d04bafp-2, 0x1.1d9c446f7952bp-2, 0x1.1cac1759457fdp-2,
    0x1.1bbc13a1df0d6p-2, 0x1.1acc399109c48p-2, 0x1.19dc896ed78bep-2, 0x1.18ed0383a886ep-2,
    0x1.17fda8182b342p-2, 0x1.170e77755c89fp-2, 0x1.161f71e48811fp-2, 0x1.153097af4804ep-2,
    0x1.1441e91f8563ep-2, 0x1.1353667f78112p-2, 0x1.12651019a6e7cp-2, 0x1.1176e638e7d28p-2,
    0x1.1088e9285fe0dp-2, 0x1.0f9b1933835c0p-2, 0x1.0ead76a615d92p-2, 0x1.0dc001cc2a4c7p-2,
    0x1.0cd2baf22319dp-2, 0x1.0be5a264b2244p-2, 0x1.0af8b870d8dcep-2, 0x1.0a0bfd63e8503p-2,
    0x1.091f718b81325p-2, 0x1.0833153593e9dp-2, 0x1.0746e8b0609a4p-2, 0x1.065aec4a772bbp-2,
    0x1.056f2052b752bp-2, 0x1.0483851850963p-2, 0x1.03981aeac2548p-2, 0x1.02ace219dbc61p-2,
    0x1.01c1daf5bc00fp-2, 0x1.00d705ced1f87p-2, 0x1.ffd8c5ebb8fb6p-3, 0x1.fe03e577d47a9p-3,
    0x1.fc2f6ae4b3788p-3, 0x1.fa5b56d5b2a83p-3, 0x1.f887a9eece58fp-3, 0x1.f6b464d4a2688p-3,
    0x1.f4e1882c6a316p-3, 0x1.f30f149c0077dp-3, 0x1.f13d0ac9df51dp-3, 0x1.ef6b6b5d200e9p-3,
    0x1.ed9a36fd7b18ep-3, 0x1.ebc96e5347d83p-3, 0x1.e9f912077c8e4p-3, 0x1.e82922c3ae317p-3,
    0x1.e659a1321043ep-3, 0x1.e48a8dfd74a9ap-3, 0x1.e2bbe9d14b77ep-3, 0x1.e0edb559a2c5bp-3,
    0x1.df1ff14326757p-3, 0x1.dd529e3b1ffe3p-3, 0x1.db85bcef76305p-3, 0x1.d9b94e0eacf71p-3,
    0x1.d7ed5247e5189p-3, 0x1.d621ca4adbeeap-3, 0x1.d456b6c7eb21ap-3, 0x1.d28c1870085c0p-3,
    0x1.d0c1eff4c4fb5p-3, 0x1.cef83e084dbf7p-3, 0x1.cd2f035d6a753p-3, 0x1.cb6640a77d9cep-3,
    0x1.c99df69a840efp-3, 0x1.c7d625eb149c8p-3, 0x1.c60ecf4e5fabcp-3, 0x1.c447f37a2ed24p-3,
    0x1.c2819324e46a0p-3, 0x1.c0bbaf057b24ap-3, 0x1.bef647d38598dp-3, 0x1.bd315e472dcf6p-3,
    0x1.bb6cf31934c8ep-3, 0x1.b9a90702f2021p-3, 0x1.b7e59abe52f41p-3, 0x1.b622af05da910p-3,
    0x1.b4604494a0bb5p-3, 0x1.b29e5c2651bb8p-3, 0x1.b0dcf6772db0fp-3, 0x1.af1c144407fe3p-3,
    0x1.ad5bb64a46b2fp-3, 0x1.ab9bdd47e1f09p-3, 0x1.a9dc89fb634bcp-3, 0x1.a81dbd23e5296p-3,
    0x1.a65f778112185p-3, 0x1.a4a1b9d324268p-3, 0x1.a2e484dae431cp-3, 0x1.a127d959a934ap-3,
    0x1.9f6bb81157906p-3, 0x1.9db021c46050dp-3, 0x1.9bf51735c06d2p-3, 0x1.9a3a992900048p-3,
    0x1.9880a86231951p-3, 0x1.96c745a5f1333p-3, 0x1.950e71b963b44p-3, 0x1.93562d6235dd5p-3,
    0x1.919e79669b888p-3, 0x1.8fe7568d4ec7cp-3, 0x1.8e30c59d8f03ep-3, 0x1.8c7ac75f20146p-3,
    0x1.8ac55c9a49568p-3, 0x1.89108617d4bc0p-3, 0x1.875c44a10dd8ep-3, 0x1.85a898ffc0ea1p-3,
    0x1.83f583fe39d82p-3, 0x1.8243066743368p-3, 0x1.80912106253cap-3, 0x1.7edfd4a6a4babp-3,
    0x1.7d2f2215020a5p-3, 0x1.7b7f0a1df7fa4p-3, 0x1.79cf8d8ebab4dp-3, 0x1.7820ad34f6a1dp-3,
    0x1.767269decf441p-3, 0x1.74c4c45ade119p-3, 0x1.7317bd783146bp-3, 0x1.716b56064ab54p-3,
    0x1.6fbf8ed51e8d9p-3, 0x1.6e1468b51223cp-3, 0x1.6c69e476faae2p-3, 0x1.6ac002ec1c011p-3,
    0x1.6916c4e62744ap-3, 0x1.676e2b3739a3ap-3, 0x1.65c636b1daf8bp-3, 0x1.641ee828fc735p-3,
    0x1.6278406ff7399p-3, 0x1.60d2405a8b041p-3, 0x1.5f2ce8bcdcb43p-3, 0x1.5d883a6b74e65p-3,
    0x1.5be4363b3e7cfp-3, 0x1.5a40dd018528bp-3, 0x1.589e2f93f3e92p-3, 0x1.56fc2ec89389ap-3,
    0x1.555adb75c9177p-3, 0x1.53ba367254546p-3, 0x1.521a40954e218p-3, 0x1.507afab626e6bp-3,
    0x1.4edc65aca4f33p-3, 0x1.4d3e8250e2da0p-3, 0x1.4ba1517b4dc73p-3, 0x1.4a04d404a3d0ep-3,
    0x1.48690ac5f2426p-3, 0x1.46cdf69893e13p-3, 0x1.453398562f2cep-3, 0x1.4399f0d8b499ap-3,
    0x1.420100fa5cc44p-3, 0x1.4068c995a6a15p-3, 0x1.3ed14b8555a5dp-3, 0x1.3d3a87a46feb0p-3,
    0x1.3ba47ece3c4b6p-3, 0x1.3a0f31de407b5p-3, 0x1.387aa1b03f1a3p-3, 0x1.36e6cf2035bf8p-3,
    0x1.3553bb0a5affcp-3, 0x1.33c1664b1c6efp-3, 0x1.322fd1bf1c996p-3, 0x1.309efe4330f95p-3,
    0x1.2f0eecb45fe59p-3, 0x1.2d7f9defde7a0p-3, 0x1.2bf112d30e7adp-3, 0x1.2a634c3b7c314p-3,
    0x1.28d64b06dc424p-3, 0x1.274a101309800p-3, 0x1.25be9c3e02b3bp-3, 0x1.2433f065e8638p-3,
    0x1.22aa0d68fa909p-3, 0x1.2120f425966f6p-3, 0x1.1f98a57a341b2p-3, 0x1.1e11224564418p-3,
    0x1.1c8a6b65cdc93p-3, 0x1.1b0481ba2b71ap-3, 0x1.197f6621496e1p-3, 0x1.17fb197a02f7fp-3,
    0x1.16779ca33fdd6p-3, 0x1.14f4f07bf2087p-3, 0x1.137315e313002p-3, 0x1.11f20db7a163bp-3,
    0x1.1071d8d89e5f2p-3, 0x1.0ef278250b19ap-3, 0x1.0d73ec7be61e2p-3, 0x1.0bf636bc28bcfp-3,
    0x1.0a7957c4c467bp-3, 0x1.08fd5074a0069p-3, 0x1.078221aa9547dp-3, 0x1.0607cc456de7ep-3,
    0x1.048e5123e0f4fp-3, 0x1.0315b1249009dp-3, 0x1.019ded2604854p-3, 0x1.00270606acb86p-3,
    0x1.fd61f949b2213p-4, 0x1.fa77a3bd7274ap-4, 0x1.f78f0d24b27afp-4, 0x1.f4a8373b3d284p-4,
    0x1.f1c323bc8a731p-4, 0x1.eedfd463b969ep-4, 0x1.ebfe4aeb8a372p-4, 0x1.e91e890e581c7p-4,
    0x1.e640908613602p-4, 0x1.e364630c3b2bbp-4, 0x1.e08a0259d761dp-4, 0x1.ddb1702772643p-4,
    0x1.dadaae2d12ce2p-4, 0x1.d805be223521ep-4, 0x1.d532a1bdc56b2p-4, 0x1.d2615ab618d24p-4,
    0x1.cf91eac0e724ep-4, 0x1.ccc4539344507p-4, 0x1.c9f896e199d21p-4, 0x1.c72eb65fa017bp-4,
    0x1.c466b3c057d61p-4, 0x1.c1a090b603520p-4, 0x1.bedc4ef21f9cbp-4, 0x1.bc19f0255dc3cp-4,
    0x1.b95975ff9bf5ap-4, 0x1.b69ae22fde979p-4, 0x1.b3de366449518p-4, 0x1.b123744a180c2p-4,
    0x1.ae6a9d8d97e38p-4, 0x1.abb3b3da200c3p-4, 0x1.a8feb8da0aad1p-4, 0x1.a64bae36adad9p-4,
    0x1.a39a95985374ap-4, 0x1.a0eb70a633a38p-4, 0x1.9e3e41066bb6ap-4, 0x1.9b93085df7a86p-4,
    0x1.98e9c850aa803p-4, 0x1.9642828126d7dp-4, 0x1.939d3890d7550p-4, 0x1.90f9ec1fe715bp-4,
    0x1.8e589ecd3a12cp-4, 0x1.8bb9523665758p-4, 0x1.891c07f7a7e17p-4, 0x1.8680c1abe1b34p-4,
    0x1.83e780ec8d33fp-4, 0x1.81504751b6c0ap-4, 0x1.7ebb1671f4e5ep-4, 0x1.7c27efe26071cp-4,
    0x1.7996d5368c795p-4, 0x1.7707c8007e527p-4, 0x1.747ac9d0a5838p-4, 0x1.71efdc35d3a8ap-4,
    0x1.6f6700bd344bfp-4, 0x1.6ce038f244b58p-4, 0x1.6a5b865ecbae0p-4, 0x1.67d8ea8ad1392p-4,
    0x1.655866fc9643bp-4, 0x1.62d9fd388c47bp-4, 0x1.605daec14ce6cp-4, 0x1.5de37d1791792p-4,
    0x1.5b6b69ba2a942p-4, 0x1.58f57625f7844p-4, 0x1.5681a3d5ddbf4p-4, 0x1.540ff442c04bbp-4,
    0x1.51a068e3771ecp-4, 0x1.4f33032cc670bp-4, 0x1.4cc7c4915606ep-4, 0x1.4a5eae81a8768p-4,
    0x1.47f7c26c125b0p-4, 0x1.459301bcb1865p-4, 0x1.43306ddd64269p-4, 0x1.40d00835bfe2ep-4,
    0x1.3e71d22b08f09p-4, 0x1.3c15cd20291dfp-4, 0x1.39bbfa75a6d69p-4, 0x1.37645b899c1e5p-4,
    0x1.350ef1b7ad836p-4, 0x1.32bbbe59010a3p-4, 0x1.306ac2c435104p-4, 0x1.2e1c004d57271p-4,
    0x1.2bcf7845dae8cp-4, 0x1.29852bfc90c3fp-4, 0x1.273d1cbd9cc09p-4, 0x1.24f74bd26d3f6p-4,
    0x1.22b3ba81b1b02p-4, 0x1.20726a0f5142bp-4, 0x1.1e335bbc61909p-4, 0x1.1bf690c71d41bp-4,
    0x1.19bc0a6adaa89p-4, 0x1.1783c9e0025b8p-4, 0x1.154dd05c05c4cp-4, 0x1.131a1f1155afdp-4,
    0x1.10e8b72f58d02p-4, 0x1.0eb999e26241fp-4, 0x1.0c8cc853a807bp-4, 0x1.0a6243a93981ap-4,
    0x1.083a0d05f5e07p-4, 0x1.061425898294ep-4, 0x1.03f08e5041ba1p-4, 0x1.01cf4873487c7p-4,
    0x1.ff60aa10aaf89p-5, 0x1.fb276a438e5b2p-5, 0x1.f6f2d39d24688p-5, 0x1.f2c2e8346f7b2p-5,
    0x1.ee97aa1977ad1p-5, 0x1.ea711b55377dfp-5, 0x1.e64f3de988796p-5, 0x1.e23213d10fd2dp-5,
    0x1.de199eff2b022p-5, 0x1.da05e15fdc5d6p-5, 0x1.d5f6dcd7b7aafp-5, 0x1.d1ec9343ceb8ep-5,
    0x1.cde706799ded4p-5, 0x1.c9e63846f8d5fp-5, 0x1.c5ea2a71f6bb9p-5, 0x1.c1f2deb8df2fdp-5,
    0x1.be0056d216a11p-5, 0x1.ba12946c0aea6p-5, 0x1.b629992d1fe95p-5, 0x1.b24566b39c14bp-5,
    0x1.ae65fe959513cp-5, 0x1.aa8b6260dc5ecp-5, 0x1.a6b5939aebdd3p-5, 0x1.a2e493c0d28ddp-5,
    0x1.9f18644721305p-5, 0x1.9b510699d6f7ap-5, 0x1.978e7c1c4e425p-5, 0x1.93d0c6292958fp-5,
    0x1.9017e6123f356p-5, 0x1.8c63dd2088535p-5, 0x1.88b4ac940b885p-5, 0x1.850a55a3cae7bp-5,
    0x1.8164d97db0afap-5, 0x1.7dc439467c425p-5, 0x1.7a287619af2aep-5, 0x1.769191097a2edp-5,
    0x1.72ff8b1eaa6cdp-5, 0x1.6f726558968a5p-5, 0x1.6bea20ad0befdp-5, 0x1.6866be083c13cp-5,
    0x1.64e83e4ca9d73p-5, 0x1.616ea25316f29p-5, 0x1.5df9eaea71750p-5, 0x1.5a8a18d7c155bp-5,
    0x1.571f2cd61619cp-5, 0x1.53b92796748bap-5, 0x1.505809bfc48b7p-5, 0x1.4cfbd3eebef25p-5,
    0x1.49a486b5db8d2p-5, 0x1.4652229d3f2e2p-5, 0x1.4304a822a9d8cp-5, 0x1.3fbc17b96503cp-5,
    0x1.3c7871ca31f76p-5, 0x1.3939b6b33845ep-5, 0x1.35ffe6c7f45f0p-5, 0x1.32cb02512640dp-5,
    0x1.2f9b098cc0460p-5, 0x1.2c6ffcadd610ep-5, 0x1.2949dbdc8b98fp-5, 0x1.2628a73604545p-5,
    0x1.230c5ecc52836p-5, 0x1.1ff502a666a6ep-5, 0x1.1ce292bfff05ap-5, 0x1.19d50f09976a3p-5,
    0x1.16cc776858f97p-5, 0x1.13c8cbb60a338p-5, 0x1.10ca0bc0ff194p-5, 0x1.0dd0374c097a9p-5,
    0x1.0adb4e0e696c6p-5, 0x1.07eb4fb3bdea8p-5, 0x1.05003bdbf59f9p-5, 0x1.021a121b3fde1p-5,
    0x1.fe71a3f3fb833p-6, 0x1.f8b8f5e967005p-6, 0x1.f30a18f7f3d29p-6, 0x1.ed650be8e02aap-6,
    0x1.e7c9cd6d5a882p-6, 0x1.e2385c1e65dfbp-6, 0x1.dcb0b67cbe20dp-6, 0x1.d732daf0bd286p-6,
    0x1.d1bec7ca4019fp-6, 0x1.cc547b408d27dp-6, 0x1.c6f3f37239c71p-6, 0x1.c19d2e651155ap-6,
    0x1.bc502a05fc32fp-6, 0x1.b70ce428e74d9p-6, 0x1.b1d35a88ac286p-6, 0x1.aca38ac6f957ep-6,
    0x1.a77d726c3b7d8p-6, 0x1.a2610ee786bf7p-6, 0x1.9d4e5d8e80c21p-6, 0x1.98455b9d4b21ep-6,
    0x1.934606366e775p-6, 0x1.8e505a62c5db1p-6, 0x1.896455116afb9p-6, 0x1.8481f317a2b97p-6,
    0x1.7fa93130ca53fp-6, 0x1.7ada0bfe4528cp-6, 0x1.761480076b03fp-6, 0x1.715889b97707ep-6,
    0x1.6ca62567772d0p-6, 0x1.67fd4f4a3c5c3p-6, 0x1.635e03804b26ep-6, 0x1.5ec83e0dcd1eep-6,
    0x1.5a3bfadc82d00p-6, 0x1.55b935bbb6611p-6, 0x1.513fea602ed6dp-6, 0x1.4cd0146424079p-6,
    0x1.4869af4733360p-6, 0x1.440cb66e545eep-6, 0x1.3fb92523d0353p-6, 0x1.3b6ef69736d49p-6,
    0x1.372e25dd572a0p-6, 0x1.32f6adf037164p-6, 0x1.2ec889af0c4cbp-6, 0x1.2aa3b3de35eedp-6,
    0x1.2688272736ecep-6, 0x1.2275de18b1264p-6, 0x1.1e6cd3266153ep-6, 0x1.1a6d00a91bba7p-6,
    0x1.167660dec9a9ap-6, 0x1.1288edea67c86p-6, 0x1.0ea4a1d40533fp-6, 0x1.0ac97688c372dp-6,
    0x1.06f765dad73ecp-6, 0x1.032e69818a273p-6, 0x1.fedcf6327a222p-7, 0x1.f76f2846d72abp-7,
    0x1.f0135c0d607f9p-7, 0x1.e8c9841d936a5p-7, 0x1.e19192d9417a8p-7, 0x1.da6b7a6c9e717p-7,
    0x1.d3572cce50067p-7, 0x1.cc549bbf7f892p-7, 0x1.c563b8cbed651p-7, 0x1.be84754a0696bp-7,
    0x1.b7b6c25afc05ep-7, 0x1.b0fa90eadbdbep-7, 0x1.aa4fd1b0accf4p-7, 0x1.a3b6752e8b6fep-7,
    0x1.9d2e6bb1c9795p-7, 0x1.96b7a5530f2e6p-7, 0x1.905211f67ec21p-7, 0x1.89fda14bd9d7dp-7,
    0x1.83ba42cea91ffp-7, 0x1.7d87e5c6660d0p-7, 0x1.77667946a6b68p-7, 0x1.7155ec2f4bdf5p-7,
    0x1.6b562d2cb12d8p-7, 0x1.65672ab7df9a4p-7, 0x1.5f88d316c2165p-7, 0x1.59bb145c5c713p-7,
    0x1.53fddc690484ap-7, 0x1.4e5118ea9da80p-7, 0x1.48b4b75cd6732p-7, 0x1.4328a50968d59p-7,
    0x1.3daccf085c83cp-7, 0x1.384122404bc55p-7, 0x1.32e58b66aaa34p-7, 0x1.2d99f700107e3p-7,
    0x1.285e51608410dp-7, 0x1.233286abc9e2dp-7, 0x1.1e1682d5b531ap-7, 0x1.190a31a27b52fp-7,
    0x1.140d7ea709961p-7, 0x1.0f2055495da7dp-7, 0x1.0a42a0c0e07eap-7, 0x1.05744c16c3d19p-7,
    0x1.00b5422662201p-7, 0x1.f80adb3b429b3p-8, 0x1.eec971faafa7ep-8, 0x1.e5a61d3369274p-8,
    0x1.dca0b13552884p-8, 0x1.d3b901f8af0a1p-8, 0x1.caeee31f01342p-8, 0x1.c24227f3ef9f4p-8,
    0x1.b9b2a36e2f1b7p-8, 0x1.b140283072397p-8, 0x1.a8ea888a5e3dcp-8, 0x1.a0b1967985829p-8,
    0x1.989523aa674e0p-8, 0x1.909501797523cp-8, 0x1.88b100f41d942p-8, 0x1.80e8f2d9dc943p-8,
    0x1.793ca79d51596p-8, 0x1.71abef6559c63p-8, 0x1.6a369a0e33679p-8, 0x1.62dc772aa2049p-8,
    0x1.5b9d56051bc5dp-8, 0x1.547905a0fb05ap-8, 0x1.4d6f54bbb59e3p-8, 0x1.468011ce19f54p-8,
    0x1.3fab0b0d919aap-8, 0x1.38f00e6d698a2p-8, 0x1.324ee9a020119p-8, 0x1.2bc76a18b8569p-8,
    0x1.25595d0c1383ap-8, 0x1.1f048f724f923p-8, 0x1.18c8ce082bb93p-8, 0x1.12a5e55072784p-8,
    0x1.0c9ba1956941ep-8, 0x1.06a9ceea45bcap-8, 0x1.00d0392ca89f2p-8, 0x1.f61d580c3c360p-9,
    0x1.eac9e5db47b1cp-9, 0x1.dfa5b25268f80p-9, 0x1.d4b0539eb154cp-9, 0x1.c9e95f917b232p-9,
    0x1.bf506ba3a1c5ep-9, 0x1.b4e50cf8c476cp-9, 0x1.aaa6d86293eacp-9, 0x1.a09562642aa83p-9,
    0x1.96b03f35700a6p-9, 0x1.8cf702c685d09p-9, 0x1.836940c3402b6p-9, 0x1.7a068c96a82e4p-9,
    0x1.70ce796e8883bp-9, 0x1.67c09a3f04560p-9, 0x1.5edc81c638432p-9, 0x1.5621c28fe544fp-9,
    0x1.4d8feef9256abp-9, 0x1.452699342a3e9p-9, 0x1.3ce5534c04ba1p-9, 0x1.34cbaf28769afp-9,
    0x1.2cd93e91ccf88p-9, 0x1.250d9334c3e9ap-9, 0x1.1d683ea67313bp-9, 0x1.15e8d26842f18p-9,
    0x1.0e8edfebeaa75p-9, 0x1.0759f89776294p-9, 0x1.0049adc9548c7p-9, 0x1.f2bb21b8dc80ap-10,
    0x1.e52a66588601ep-10, 0x1.d7e04c321e856p-10, 0x1.cadbf617f1bb1p-10, 0x1.be1c86f6856b5p-10,
    0x1.b1a121dd0e476p-10, 0x1.a568ea05f1aafp-10, 0x1.997302df53c90p-10, 0x1.8dbe9013b1abap-10,
    0x1.824ab59286763p-10, 0x1.77169798fb4e1p-10, 0x1.6c215abaa1486p-10, 0x1.616a23ea34b76p-10,
    0x1.56f0188269316p-10, 0x1.4cb25e4ebd9bbp-10, 0x1.42b01b94578bcp-10, 0x1.38e8771ae53ecp-10,
    0x1.2f5a9835856cfp-10, 0x1.2605a6cbb4343p-10, 0x1.1ce8cb623c4adp-10, 0x1.14032f242bb4bp-10,
    0x1.0b53fbebcb1ddp-10, 0x1.02da5c4b97061p-10, 0x1.f52af72e73ba1p-11, 0x1.e5090bd90c4dap-11,
    0x1.d54d5078df8f5p-11, 0x1.c5f620a806f9fp-11, 0x1.b701d9cab72c2p-11, 0x1.a86edb2121deep-11,
    0x1.9a3b85d94e6cbp-11, 0x1.8c663d20e6c83p-11, 0x1.7eed6636f6ebdp-11, 0x1.71cf687d9c8f1p-11,
    0x1.650aad8ba501ap-11, 0x1.589da13e16f88p-11, 0x1.4c86b1c9a60efp-11, 0x1.40c44fcc0db66p-11,
    0x1.3554ee5d5143bp-11, 0x1.2a370320dec15p-11, 0x1.1f69065692243p-11, 0x1.14e972eb9676ap-11,
    0x1.0ab6c68b22845p-11, 0x1.00cf81af0e8cap-11, 0x1.ee644f6080e9fp-12, 0x1.dbba7dadd7e33p-12,
    0x1.c99ea0d5481c5p-12, 0x1.b80dd18476f2dp-12, 0x1.a7052ea6e1fcbp-12, 0x1.9681dd84cae8dp-12,
    0x1.868109e1b107cp-12, 0x1.76ffe61a531a5p-12, 0x1.67fbab4233ee9p-12, 0x1.597199409c609p-12,
    0x1.4b5ef6ed153e0p-12, 0x1.3dc1122b5394ep-12, 0x1.3095400691deap-12, 0x1.23d8dccc5087ep-12,
    0x1.17894c2678482p-12, 0x1.0ba3f934d8c65p-12, 0x1.002656a5fdffcp-12, 0x1.ea1bbd9eadd90p-13,
    0x1.d4b027894fd1cp-13, 0x1.c004fedd86d11p-13, 0x1.ac15674307106p-13, 0x1.98dc9461fe243p-13,
    0x1.8655ca0be9543p-13, 0x1.747c5c62cd95dp-13, 0x1.634baffec6cd7p-13, 0x1.52bf3a11e3fb2p-13,
    0x1.42d2808a46390p-13, 0x1.33811a3278990p-13, 0x1.24c6aecff7151p-13, 0x1.169ef73fdb18dp-13,
    0x1.0905bd91a449dp-13, 0x1.f7edba402916ap-14, 0x1.dedc85502ce67p-14, 0x1.c6cfd8bb4b77fp-14,
    0x1.afbfd3fd63045p-14, 0x1.99a4b9c7e109dp-14, 0x1.8476f01f3fd02p-14, 0x1.702f00744ad16p-14,
    0x1.5cc597b91c9cap-14, 0x1.4a338671c9a84p-14, 0x1.3871c0c0ac77ep-14, 0x1.27795e6e484a0p-14,
    0x1.17439aecb892ap-14, 0x1.07c9d556a4acbp-14, 0x1.f20b20d35f3b4p-15, 0x1.d5e0e4f8bbe86p-15,
    0x1.bb088aded7b20p-15, 0x1.a175ed351e7e4p-15, 0x1.891d2d6946402p-15, 0x1.71f2b36e74022p-15,
    0x1.5beb2d7b2e925p-15, 0x1.46fb8fbe2089ep-15, 0x1.33191409ae360p-15, 0x1.2039397666b72p-15,
    0x1.0e51c3fc5a8cfp-15, 0x1.fab17806c97cbp-16, 0x1.da88dbd4eda98p-16, 0x1.bc16d30bf5d72p-16,
    0x1.9f49032ac479ep-16, 0x1.840d965ff3788p-16, 0x1.6a533a5243081p-16, 0x1.52091ed80e3afp-16,
    0x1.3b1ef49e0bd41p-16, 0x1.2584ebbda8895p-16, 0x1.112bb2434e82dp-16, 0x1.fc08e549e8daap-17,
    0x1.d801a452aa758p-17, 0x1.b625de8070402p-17, 0x1.965abf986e202p-17, 0x1.78865ebcf0bebp-17,
    0x1.5c8fbac9ad7eep-17, 0x1.425eb695f2175p-17, 0x1.29dc151dc3532p-17, 0x1.12f1759306a08p-17,
    0x1.fb129eafbc0d3p-18, 0x1.d31ddbc6d34acp-18, 0x1.addcd9245a09bp-18, 0x1.8b2964c6c27bbp-18,
    0x1.6adedb490e615p-18, 0x1.4cda1f192d811p-18, 0x1.30f98f9062485p-18, 0x1.171cfff089b8ap-18,
    0x1.fe4b5c9266fdep-19, 0x1.d1ec748f0a793p-19, 0x1.a8e537e7e1c8dp-19, 0x1.830034c1a22c5p-19,
    0x1.600a849a0fdfcp-19, 0x1.3fd3b97b88d67p-19, 0x1.222dcb253091cp-19, 0x1.06ed042e18ca8p-19,
    0x1.dbcfde538d648p-20, 0x1.adee87a8e8798p-20, 0x1.83eba89ad102ap-20, 0x1.5d80f4cb73066p-20,
    0x1.3a6c0a13790a4p-20, 0x1.1a6e4b96b0d04p-20, 0x1.fa997a4d5dc2ep-21, 0x1.c59fbdfeec0a3p-21,
    0x1.958713d3d2622p-21, 0x1.69ed979f0d32fp-21, 0x1.42778995332a7p-21, 0x1.1ecf097b6e1f4p-21,
    0x1.fd47a5f3d5834p-22, 0x1.c355f64b936b0p-22, 0x1.8f3d5eab69602p-22, 0x1.607beaa683e6cp-22,
    0x1.3698d9f491254p-22, 0x1.112426ac62a44p-22, 0x1.df6c1d30ad4f2p-23, 0x1.a3dd3f7fe98a3p-23,
    0x1.6eea907f5de10p-23, 0x1.3ff0d30a51828p-23, 0x1.1659de0789c5ap-23, 0x1.e337a1ca1c46bp-24,
    0x1.a2709e866b7fap-24, 0x1.697787cc1f7b9p-24, 0x1.377955fd37cedp-24, 0x1.0bb5c7af4fc8ep-24,
    0x1.cafc27b2165bfp-25, 0x1.886755a8e0073p-25, 0x1.4e8e0c58b4cd3p-25, 0x1.1c6d0e40afc3dp-25,
    0x1.e2358efe58924p-26, 0x1.978a89c4ee101p-26, 0x1.57608eda13612p-26, 0x1.2066e7a5c90cbp-26,
    0x1.e2e2758d8428dp-27, 0x1.92e8af069ee80p-27, 0x1.4f066af77f64ep-27, 0x1.15984e4948bb0p-27,
    0x1.ca58f5d115606p-28, 0x1.78fb6c5858e5ap-28, 0x1.34ddd5858c3e8p-28, 0x1.f81c09edc7e9fp-29,
    0x1.99b4507efa111p-29, 0x1.4b9385ec99a48p-29, 0x1.0b2e86655d714p-29, 0x1.aca899bcdd2edp-30,
    0x1.56469af6e8498p-30, 0x1.0fffa0d6ac79fp-30, 0x1.ae2cf47f17c25p-31, 0x1.527117bed5904p-31,
    0x1.08df91d16e8bcp-31, 0x1.9c58ba1eeaff5p-32, 0x1.3f2a90967f7d7p-32, 0x1.eb391bcee0448p-33,
    0x1.77c063bc24406p-33, 0x1.1da4525ea0776p-33, 0x1.af7efe1e3fb0bp-34, 0x1.43bf3b15d7a54p-34,
    0x1.e2767fd2a946bp-35, 0x1.64edc3c152bdcp-35, 0x1.061a97f24e2bcp-35, 0x1.7dfcaea8f6323p-36,
    0x1.1422525ca2a45p-36, 0x1.8bed081ef9b31p-37, 0x1.19675b0dc5544p-37, 0x1.8c71318d91e4cp-38,
    0x1.14a93abb28abbp-38, 0x1.7e69299c9fd9dp-39, 0x1.05a21bd98812ap-39, 0x1.6240bfb58f1f0p-40,
    0x1.da6d11c6d75b0p-41, 0x1.3a1173dcbbecap-41, 0x1.9ae359d9dd353p-42, 0x1.09728e4a0f959p-42,
    0x1.528992ace3420p-43, 0x1.a9e9a1b348888p-44, 0x1.082134168dc05p-44, 0x1.42c01a251fef4p-45,
    0x1.844467b7ae569p-46, 0x1.cb7eafb0884d9p-47, 0x1.0b4300a1bb73fp-47, 0x1.31576be881eaep-48,
    0x1.564b44b77a4cep-49, 0x1.782438fdc89c2p-50, 0x1.94bfbc5c0c888p-51, 0x1.aa0132f86a8edp-52,
    0x1.b60a1460e1041p-53, 0x1.b775bea26adffp-54, 0x1.ad904cdf7c4f2p-55, 0x1.987e9085e3ffcp-56,
    0x1.794df540f40b9p-57, 0x1.51e5fc6129110p-58, 0x1.24d9f330ca65bp-59, 0x1.ea3f7f53504f3p-61,
    0x1.8b6d64355b87dp-62, 0x1.329b1867037b5p-63, 0x1.c7dfb3929056fp-65, 0x1.440188e845deap-66,
    0x1.b6f026e7c92bap-68, 0x1.1a62d7f7fac47p-69, 0x1.57cab86f359f1p-71, 0x1.8a64829d41586p-73,
    0x1.a861bbfd1c314p-75, 0x1.aa2bdfde48cffp-77, 0x1.8d2c1d7470f36p-79, 0x1.5561463b10fb6p-81,
    0x1.0cc0379568ecfp-83, 0x1.80929a2be8e99p-86, 0x1.efd0ae9d97351p-89, 0x1.1d2a986f019aap-91,
    0x1.217461378e7f4p-94, 0x1.000998693a2e7p-97, 0x1.8526109bb5f93p-101, 0x1.f3f1ae3727d22p-105,
    0x1.0a6d7900f50dbp-108, 0x1.cd202b28e6011p-113, 0x1.3c01517ab82dap-117, 0x1.4d1dfaee5daa9p-122,
    0x1.04fe0a47e89e7p-127, 0x1.23e7f5cf85d7ap-133, 0x1.bc2479b95a3bfp-140, 0x1.b1d73649c9d1ep-147,
    0x1.fb5955dd2041ep-155, 0x1.460ba84e64025p-163, 0x1.9e66cebd35326p-173, 0x1.c8682728f7a6bp-184,
    0x1.707c9f5ba3302p-196, 0x1.5fc4719abddd6p-210, 0x1.2bb6e30a20308p-226, 0x1.394a761b20a6ap-245,
    0x1.e1dce6a6340b8p-268, 0x1.0a7eca2f2b9b6p-294, 0x1.2d7c2d9a11556p-327, 0x1.27d2c5cde1902p-368,
    0x1.5ffa93af55145p-421, 0x1.179b2ea4df09fp-491, 0x1.953b9f1d41b7fp-590, 0x1.f412b14e45f59p-738,
    0x1.bf68651c086cdp-984, 0x0.0p+0, 0x0.0p+0, 0x0.0p+0,
};

}  // namespace toruslab::detail
