/**
 * @file ops.hpp
 * @brief Runtime-dispatched inner-loop kernels (scalar reference + SIMD).
 *
 * Every data-parallel loop of the pipeline goes through this table. The
 * scalar implementations define the semantics; the AVX2 / NEON variants are
 * required to produce bit-identical results, which pins down two contracts:
 *
 *  - per-element operations (scale, axpy, mul, rectifiers, feedback_product)
 *    evaluate the exact expression given below, no fma contraction;
 *  - conv2d_row accumulates one kernel row at a time into a row subtotal and
 *    then sums subtotals in row order. Both variants use that summation tree.
 *
 * Rectified outputs are canonical +0.0 for non-positive inputs, so identical
 * pipelines produce byte-identical response maps.
 */
#pragma once

#include <cstddef>

namespace stmd::simd {

enum class Level {
    scalar,
    avx2,
    neon,
};

const char* level_name(Level level);

struct Ops {
    Level level;

    /// dst[i] = w * src[i]
    void (*scale)(double* dst, const double* src, double w, std::size_t n);

    /// dst[i] += w * src[i]
    void (*axpy)(double* dst, const double* src, double w, std::size_t n);

    /// dst[i] = a[i] * b[i]
    void (*mul)(double* dst, const double* a, const double* b, std::size_t n);

    /// on[i] = x[i] > 0 ? x[i] : +0.0 ; off[i] = x[i] < 0 ? -x[i] : +0.0
    void (*split_rect)(double* on, double* off, const double* x, std::size_t n);

    /// dst[i] = x[i] > 0 ? x[i] : +0.0
    void (*rect)(double* dst, const double* x, std::size_t n);

    /// t = k * fb[i]; dst[i] = (a[i] + t) * (b[i] + t)
    void (*feedback_product)(double* dst, const double* a, const double* b,
                             const double* fb, double k, std::size_t n);

    /// One output row of a dense 2-D correlation against a padded source:
    ///   out[x] = sum_ky( sum_kx( kern[ky*kw+kx] * src[ky*stride + x + kx] ) )
    /// src points at the first padded pixel contributing to out[0].
    void (*conv2d_row)(double* out, const double* src, std::size_t stride,
                       const double* kern, int kw, int kh, std::size_t w);
};

/// Best level this CPU supports.
Level detect();

/// True if `level` can run on this CPU.
bool supported(Level level);

/// Table for an explicit level; throws std::invalid_argument if unsupported.
const Ops& ops_for(Level level);

/// Process-wide table: detect() unless the STMD_SIMD environment variable
/// ("scalar", "avx2", "neon", "auto") overrides it. Resolved once.
const Ops& active();

// Variant tables; null when the translation unit was built without support.
const Ops* scalar_ops();
const Ops* avx2_ops();
const Ops* neon_ops();

}  // namespace stmd::simd
