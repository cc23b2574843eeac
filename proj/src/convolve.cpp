#include <stmd/convolve.hpp>

#include <stmd/parallel.hpp>

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace stmd {
namespace {

// Materializes replicate-edge padding once so the inner loop is a dense
// shifted-window sum for every output pixel, including boundary ones.
struct PaddedFrame {
    int radius;
    int stride;
    std::vector<double> values;

    PaddedFrame(const Frame& src, int r)
        : radius(r), stride(src.width() + 2 * r),
          values(static_cast<std::size_t>(stride) * (src.height() + 2 * r)) {
        const int w = src.width();
        const int h = src.height();
        for (int py = 0; py < h + 2 * r; ++py) {
            int sy = std::clamp(py - r, 0, h - 1);
            const double* srow = src.row(sy);
            double* drow = values.data() + static_cast<std::size_t>(py) * stride;
            for (int px = 0; px < r; ++px) drow[px] = srow[0];
            std::memcpy(drow + r, srow, sizeof(double) * w);
            for (int px = 0; px < r; ++px) drow[r + w + px] = srow[w - 1];
        }
    }

    const double* window_origin(int out_y) const {
        return values.data() + static_cast<std::size_t>(out_y) * stride;
    }
};

}  // namespace

Frame convolve_spatial(const Frame& frame, const DiscreteSpatialKernel& kernel) {
    if (frame.empty()) throw std::invalid_argument("convolve_spatial: empty frame");

    // Exactly-zero border rings (rectified kernels have plenty) contribute
    // nothing; dropping them shrinks the padded window.
    DiscreteSpatialKernel eff = kernel.cropped();
    const int r = eff.radius();
    const int side = eff.side();

    Frame out(frame.width(), frame.height());
    if (r == 0) {
        simd::active().scale(out.data(), frame.data(), eff.weights()[0], frame.size());
        return out;
    }

    PaddedFrame padded(frame, r);
    const auto& ops = simd::active();
    const double* kw = eff.weights().data();
    const std::size_t w = static_cast<std::size_t>(frame.width());

    parallel_chunks(frame.height(), [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            ops.conv2d_row(out.row(y), padded.window_origin(y), padded.stride, kw, side, side, w);
        }
    });
    return out;
}

TemporalConvolver::TemporalConvolver(DiscreteTemporalKernel kernel, int width, int height)
    : kernel_(std::move(kernel)), width_(width), height_(height) {
    if (width_ <= 0 || height_ <= 0) {
        throw std::invalid_argument("TemporalConvolver: dimensions must be positive");
    }
    ring_.assign(static_cast<std::size_t>(kernel_.length()) * width_ * height_, 0.0);
}

Frame TemporalConvolver::push(const Frame& sample) {
    if (sample.width() != width_ || sample.height() != height_) {
        throw std::invalid_argument("TemporalConvolver: frame shape mismatch");
    }
    const int len = kernel_.length();
    const std::size_t px = static_cast<std::size_t>(width_) * height_;

    double* slot = ring_.data() + static_cast<std::size_t>(count_ % len) * px;
    std::memcpy(slot, sample.data(), sizeof(double) * px);

    // Taps beyond the available history multiply implicit all-zero frames.
    const int avail = static_cast<int>(std::min<long>(count_ + 1, len));
    const auto& taps = kernel_.taps();
    const auto& ops = simd::active();

    Frame out(width_, height_);
    ops.scale(out.data(), slot, taps[0], px);
    for (int k = 1; k < avail; ++k) {
        const double* past = ring_.data() + static_cast<std::size_t>((count_ - k) % len) * px;
        ops.axpy(out.data(), past, taps[k], px);
    }
    ++count_;
    return out;
}

void TemporalConvolver::reset() {
    std::fill(ring_.begin(), ring_.end(), 0.0);
    count_ = 0;
}

}  // namespace stmd
