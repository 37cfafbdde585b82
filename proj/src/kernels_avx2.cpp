#include "guardmark/kernels.hpp"

#include <immintrin.h>

// Compiled with -mavx2 only. No fma: mul+add keeps results bit-identical
// to the scalar reference.

namespace guardmark::kernels {
namespace {

void add_v(const float* a, const float* b, float* out, std::size_t n) {
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        _mm256_storeu_ps(out + i, _mm256_add_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (std::size_t i = n8; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_v(const float* a, const float* b, float* out, std::size_t n) {
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        _mm256_storeu_ps(out + i, _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (std::size_t i = n8; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_v(const float* a, const float* b, float* out, std::size_t n) {
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        _mm256_storeu_ps(out + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (std::size_t i = n8; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_v(float alpha, const float* x, float* y, std::size_t n) {
    __m256 av = _mm256_set1_ps(alpha);
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        __m256 t = _mm256_mul_ps(av, _mm256_loadu_ps(x + i));
        _mm256_storeu_ps(y + i, _mm256_add_ps(_mm256_loadu_ps(y + i), t));
    }
    for (std::size_t i = n8; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void scale_v(float alpha, const float* x, float* out, std::size_t n) {
    __m256 av = _mm256_set1_ps(alpha);
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        _mm256_storeu_ps(out + i, _mm256_mul_ps(av, _mm256_loadu_ps(x + i)));
    }
    for (std::size_t i = n8; i < n; ++i) out[i] = alpha * x[i];
}

// cmp+blend rather than min/max so NaN propagates exactly like the scalar path.
void clamp_v(const float* x, float lo, float hi, float* out, std::size_t n) {
    __m256 lov = _mm256_set1_ps(lo);
    __m256 hiv = _mm256_set1_ps(hi);
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        __m256 v = _mm256_loadu_ps(x + i);
        v = _mm256_blendv_ps(v, lov, _mm256_cmp_ps(v, lov, _CMP_LT_OQ));
        v = _mm256_blendv_ps(v, hiv, _mm256_cmp_ps(v, hiv, _CMP_GT_OQ));
        _mm256_storeu_ps(out + i, v);
    }
    for (std::size_t i = n8; i < n; ++i) {
        float v = x[i];
        if (v < lo) v = lo;
        if (v > hi) v = hi;
        out[i] = v;
    }
}

void relu_v(const float* x, float* out, std::size_t n) {
    __m256 zero = _mm256_setzero_ps();
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        _mm256_storeu_ps(out + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
    }
    for (std::size_t i = n8; i < n; ++i) out[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_v(const float* x, const float* dy, float* dx, std::size_t n) {
    __m256 zero = _mm256_setzero_ps();
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(x + i), zero, _CMP_GT_OQ);
        __m256 g = _mm256_and_ps(mask, _mm256_loadu_ps(dy + i));
        _mm256_storeu_ps(dx + i, _mm256_add_ps(_mm256_loadu_ps(dx + i), g));
    }
    for (std::size_t i = n8; i < n; ++i) {
        if (x[i] > 0.0f) dx[i] = dx[i] + dy[i];
    }
}

inline float hreduce8(__m256 s) {
    __m128 u = _mm_add_ps(_mm256_castps256_ps128(s), _mm256_extractf128_ps(s, 1));
    __m128 w = _mm_add_ps(u, _mm_movehl_ps(u, u));       // (u0+u2, u1+u3, ...)
    __m128 r = _mm_add_ss(w, _mm_shuffle_ps(w, w, 0x1)); // (u0+u2)+(u1+u3)
    return _mm_cvtss_f32(r);
}

float dot_v(const float* a, const float* b, std::size_t n) {
    __m256 s = _mm256_setzero_ps();
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        __m256 t = _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i));
        s = _mm256_add_ps(s, t);
    }
    float r = hreduce8(s);
    for (std::size_t i = n8; i < n; ++i) r = r + a[i] * b[i];
    return r;
}

inline double hreduce4d(__m256d s) {
    __m128d u = _mm_add_pd(_mm256_castpd256_pd128(s), _mm256_extractf128_pd(s, 1)); // (s0+s2, s1+s3)
    __m128d r = _mm_add_sd(u, _mm_unpackhi_pd(u, u));
    return _mm_cvtsd_f64(r);
}

double sum_f64_v(const float* x, std::size_t n) {
    __m256d s = _mm256_setzero_pd();
    std::size_t n4 = n / 4 * 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        s = _mm256_add_pd(s, _mm256_cvtps_pd(_mm_loadu_ps(x + i)));
    }
    double r = hreduce4d(s);
    for (std::size_t i = n4; i < n; ++i) r = r + static_cast<double>(x[i]);
    return r;
}

double sumsq_f64_v(const float* x, std::size_t n) {
    __m256d s = _mm256_setzero_pd();
    std::size_t n4 = n / 4 * 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        __m256d v = _mm256_cvtps_pd(_mm_loadu_ps(x + i));
        s = _mm256_add_pd(s, _mm256_mul_pd(v, v));
    }
    double r = hreduce4d(s);
    for (std::size_t i = n4; i < n; ++i) {
        double v = static_cast<double>(x[i]);
        r = r + v * v;
    }
    return r;
}

void mm_v(const float* a, const float* b, float* c,
          std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    if (!accumulate) {
        for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0f;
    }
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < m; ++i) {
        float* crow = c + i * n;
        for (std::size_t kk = 0; kk < k; ++kk) {
            float av = a[i * k + kk];
            const float* brow = b + kk * n;
            __m256 avv = _mm256_set1_ps(av);
            for (std::size_t j = 0; j < n8; j += 8) {
                __m256 t = _mm256_mul_ps(avv, _mm256_loadu_ps(brow + j));
                _mm256_storeu_ps(crow + j, _mm256_add_ps(_mm256_loadu_ps(crow + j), t));
            }
            for (std::size_t j = n8; j < n; ++j) crow[j] = crow[j] + av * brow[j];
        }
    }
}

void mm_abt_v(const float* a, const float* b, float* c,
              std::size_t m, std::size_t n, std::size_t p, bool accumulate) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            float d = dot_v(a + i * n, b + j * n, n);
            c[i * p + j] = accumulate ? c[i * p + j] + d : d;
        }
    }
}

void mm_atb_v(const float* a, const float* b, float* c,
              std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    if (!accumulate) {
        for (std::size_t i = 0; i < k * n; ++i) c[i] = 0.0f;
    }
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < m; ++i) {
        const float* brow = b + i * n;
        for (std::size_t j = 0; j < k; ++j) {
            float av = a[i * k + j];
            float* crow = c + j * n;
            __m256 avv = _mm256_set1_ps(av);
            for (std::size_t t = 0; t < n8; t += 8) {
                __m256 u = _mm256_mul_ps(avv, _mm256_loadu_ps(brow + t));
                _mm256_storeu_ps(crow + t, _mm256_add_ps(_mm256_loadu_ps(crow + t), u));
            }
            for (std::size_t t = n8; t < n; ++t) crow[t] = crow[t] + av * brow[t];
        }
    }
}

bool has_nonfinite_v(const float* x, std::size_t n) {
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        __m256 v = _mm256_loadu_ps(x + i);
        // v - v is 0 for finite values, NaN for inf/NaN
        __m256 t = _mm256_sub_ps(v, v);
        __m256 bad = _mm256_cmp_ps(t, _mm256_setzero_ps(), _CMP_NEQ_UQ);
        if (_mm256_movemask_ps(bad) != 0) return true;
    }
    for (std::size_t i = n8; i < n; ++i) {
        float v = x[i];
        if (v - v != 0.0f) return true;
    }
    return false;
}

} // namespace

const Ops* avx2_impl_table() {
    static const Ops ops{
        "avx2",   add_v,  sub_v,      mul_v,  axpy_v,    scale_v,
        clamp_v,  relu_v, relu_bwd_v, dot_v,  sum_f64_v, sumsq_f64_v,
        mm_v,     mm_abt_v, mm_atb_v, has_nonfinite_v,
    };
    return &ops;
}

} // namespace guardmark::kernels
