// NEON variants of the inner-loop kernels (2 doubles per vector, aarch64).
//
// Same bit-equivalence contract as the AVX2 unit: no fma, scalar row-subtotal
// summation tree in conv2d_row.

#include <stmd/simd/ops.hpp>

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace stmd::simd {
namespace {

void scale_neon(double* dst, const double* src, double w, std::size_t n) {
    const float64x2_t vw = vdupq_n_f64(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vw, vld1q_f64(src + i)));
    }
    for (; i < n; ++i) dst[i] = w * src[i];
}

void axpy_neon(double* dst, const double* src, double w, std::size_t n) {
    const float64x2_t vw = vdupq_n_f64(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vld1q_f64(dst + i);
        acc = vaddq_f64(acc, vmulq_f64(vw, vld1q_f64(src + i)));
        vst1q_f64(dst + i, acc);
    }
    for (; i < n; ++i) dst[i] += w * src[i];
}

void mul_neon(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void split_rect_neon(double* on, double* off, const double* x, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        vst1q_f64(on + i, vmaxq_f64(v, zero));
        vst1q_f64(off + i, vmaxq_f64(vsubq_f64(zero, v), zero));
    }
    for (; i < n; ++i) {
        double v = x[i];
        on[i] = v > 0.0 ? v : 0.0;
        off[i] = v < 0.0 ? -v : 0.0;
    }
}

void rect_neon(double* dst, const double* x, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmaxq_f64(vld1q_f64(x + i), zero));
    }
    for (; i < n; ++i) {
        double v = x[i];
        dst[i] = v > 0.0 ? v : 0.0;
    }
}

void feedback_product_neon(double* dst, const double* a, const double* b,
                           const double* fb, double k, std::size_t n) {
    const float64x2_t vk = vdupq_n_f64(k);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vmulq_f64(vk, vld1q_f64(fb + i));
        float64x2_t lhs = vaddq_f64(vld1q_f64(a + i), t);
        float64x2_t rhs = vaddq_f64(vld1q_f64(b + i), t);
        vst1q_f64(dst + i, vmulq_f64(lhs, rhs));
    }
    for (; i < n; ++i) {
        double t = k * fb[i];
        dst[i] = (a[i] + t) * (b[i] + t);
    }
}

void conv2d_row_neon(double* out, const double* src, std::size_t stride,
                     const double* kern, int kw, int kh, std::size_t w) {
    std::size_t x = 0;
    for (; x + 2 <= w; x += 2) {
        float64x2_t total = vdupq_n_f64(0.0);
        for (int ky = 0; ky < kh; ++ky) {
            const double* srow = src + static_cast<std::size_t>(ky) * stride + x;
            const double* krow = kern + static_cast<std::size_t>(ky) * kw;
            float64x2_t rowsum = vdupq_n_f64(0.0);
            for (int kx = 0; kx < kw; ++kx) {
                float64x2_t tap = vdupq_n_f64(krow[kx]);
                rowsum = vaddq_f64(rowsum, vmulq_f64(tap, vld1q_f64(srow + kx)));
            }
            total = vaddq_f64(total, rowsum);
        }
        vst1q_f64(out + x, total);
    }
    for (; x < w; ++x) {
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

const Ops kNeonOps = {
    Level::neon,
    scale_neon,
    axpy_neon,
    mul_neon,
    split_rect_neon,
    rect_neon,
    feedback_product_neon,
    conv2d_row_neon,
};

}  // namespace

const Ops* neon_ops() { return &kNeonOps; }

}  // namespace stmd::simd

#else  // not aarch64 NEON

namespace stmd::simd {
const Ops* neon_ops() { return nullptr; }
}  // namespace stmd::simd

#endif
