// AVX2 variants of the inner-loop kernels (4 doubles per vector).
//
// Bit-equivalence with the scalar reference is part of the contract: no fma,
// and conv2d_row keeps the scalar row-subtotal summation tree. Each lane then
// performs exactly the scalar op sequence for its element.

#include <stmd/simd/ops.hpp>

#if defined(__AVX2__)

#include <immintrin.h>

namespace stmd::simd {
namespace {

void scale_avx2(double* dst, const double* src, double w, std::size_t n) {
    const __m256d vw = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(vw, _mm256_loadu_pd(src + i)));
    }
    for (; i < n; ++i) dst[i] = w * src[i];
}

void axpy_avx2(double* dst, const double* src, double w, std::size_t n) {
    const __m256d vw = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(dst + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(vw, _mm256_loadu_pd(src + i)));
        _mm256_storeu_pd(dst + i, acc);
    }
    for (; i < n; ++i) dst[i] += w * src[i];
}

void mul_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

// max_pd(v, +0) canonicalizes both -0.0 and negative values to +0.0, matching
// the scalar `v > 0 ? v : 0.0`.
void split_rect_avx2(double* on, double* off, const double* x, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(on + i, _mm256_max_pd(v, zero));
        _mm256_storeu_pd(off + i, _mm256_max_pd(_mm256_sub_pd(zero, v), zero));
    }
    for (; i < n; ++i) {
        double v = x[i];
        on[i] = v > 0.0 ? v : 0.0;
        off[i] = v < 0.0 ? -v : 0.0;
    }
}

void rect_avx2(double* dst, const double* x, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
    }
    for (; i < n; ++i) {
        double v = x[i];
        dst[i] = v > 0.0 ? v : 0.0;
    }
}

void feedback_product_avx2(double* dst, const double* a, const double* b,
                           const double* fb, double k, std::size_t n) {
    const __m256d vk = _mm256_set1_pd(k);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(vk, _mm256_loadu_pd(fb + i));
        __m256d lhs = _mm256_add_pd(_mm256_loadu_pd(a + i), t);
        __m256d rhs = _mm256_add_pd(_mm256_loadu_pd(b + i), t);
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(lhs, rhs));
    }
    for (; i < n; ++i) {
        double t = k * fb[i];
        dst[i] = (a[i] + t) * (b[i] + t);
    }
}

void conv2d_row_avx2(double* out, const double* src, std::size_t stride,
                     const double* kern, int kw, int kh, std::size_t w) {
    std::size_t x = 0;
    for (; x + 4 <= w; x += 4) {
        __m256d total = _mm256_setzero_pd();
        for (int ky = 0; ky < kh; ++ky) {
            const double* srow = src + static_cast<std::size_t>(ky) * stride + x;
            const double* krow = kern + static_cast<std::size_t>(ky) * kw;
            __m256d rowsum = _mm256_setzero_pd();
            for (int kx = 0; kx < kw; ++kx) {
                __m256d tap = _mm256_set1_pd(krow[kx]);
                rowsum = _mm256_add_pd(rowsum, _mm256_mul_pd(tap, _mm256_loadu_pd(srow + kx)));
            }
            total = _mm256_add_pd(total, rowsum);
        }
        _mm256_storeu_pd(out + x, total);
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

const Ops kAvx2Ops = {
    Level::avx2,
    scale_avx2,
    axpy_avx2,
    mul_avx2,
    split_rect_avx2,
    rect_avx2,
    feedback_product_avx2,
    conv2d_row_avx2,
};

}  // namespace

const Ops* avx2_ops() { return &kAvx2Ops; }

}  // namespace stmd::simd

#else  // !__AVX2__

namespace stmd::simd {
const Ops* avx2_ops() { return nullptr; }
}  // namespace stmd::simd

#endif
