/**
 * @file convolve.hpp
 * @brief Spatial and streaming temporal convolution engines.
 *
 * Spatial convolution uses replicate-edge boundary handling and may
 * parallelize over rows; results are deterministic regardless of the worker
 * count or SIMD level in use on a given host (scalar and SIMD variants are
 * bit-equivalent by contract).
 */
#pragma once

#include <stmd/frame.hpp>
#include <stmd/kernels.hpp>
#include <stmd/simd/ops.hpp>

namespace stmd {

/// Same-size 2-D convolution of a frame with a square kernel,
/// replicate-edge boundary policy. Throws on an empty frame.
Frame convolve_spatial(const Frame& frame, const DiscreteSpatialKernel& kernel);

/// Streaming temporal FIR filter over frames arriving at fixed dt. Maintains
/// a ring buffer of length() frames; pre-stream history is all-zero (cold
/// start), so the first outputs are partial sums.
class TemporalConvolver {
public:
    TemporalConvolver(DiscreteTemporalKernel kernel, int width, int height);

    /// Appends the current sample and returns sum_k taps[k] * frame(t - k*dt).
    Frame push(const Frame& sample);

    const DiscreteTemporalKernel& kernel() const { return kernel_; }
    long steps() const { return count_; }
    int width() const { return width_; }
    int height() const { return height_; }

    void reset();

private:
    DiscreteTemporalKernel kernel_;
    int width_ = 0;
    int height_ = 0;
    std::vector<double> ring_;  // length() frames, slot s = step % length()
    long count_ = 0;
};

}  // namespace stmd
