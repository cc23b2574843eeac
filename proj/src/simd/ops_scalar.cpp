// Scalar reference kernels. These define the bit-level semantics that the
// SIMD variants must reproduce exactly.

#include <stmd/simd/ops.hpp>

namespace stmd::simd {
namespace {

void scale_scalar(double* dst, const double* src, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = w * src[i];
}

void axpy_scalar(double* dst, const double* src, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += w * src[i];
}

void mul_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void split_rect_scalar(double* on, double* off, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double v = x[i];
        on[i] = v > 0.0 ? v : 0.0;
        off[i] = v < 0.0 ? -v : 0.0;
    }
}

void rect_scalar(double* dst, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double v = x[i];
        dst[i] = v > 0.0 ? v : 0.0;
    }
}

void feedback_product_scalar(double* dst, const double* a, const double* b,
                             const double* fb, double k, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double t = k * fb[i];
        dst[i] = (a[i] + t) * (b[i] + t);
    }
}

void conv2d_row_scalar(double* out, const double* src, std::size_t stride,
                       const double* kern, int kw, int kh, std::size_t w) {
    for (std::size_t x = 0; x < w; ++x) {
        double total = 0.0;
        for (int ky = 0; ky < kh; ++ky) {
            const double* srow = src + static_cast<std::size_t>(ky) * stride + x;
            const double* krow = kern + static_cast<std::size_t>(ky) * kw;
            double rowsum = 0.0;
            for (int kx = 0; kx < kw; ++kx) {
                rowsum += krow[kx] * srow[kx];
            }
            total += rowsum;
        }
        out[x] = total;
    }
}

const Ops kScalarOps = {
    Level::scalar,
    scale_scalar,
    axpy_scalar,
    mul_scalar,
    split_rect_scalar,
    rect_scalar,
    feedback_product_scalar,
    conv2d_row_scalar,
};

}  // namespace

const Ops* scalar_ops() { return &kScalarOps; }

}  // namespace stmd::simd
