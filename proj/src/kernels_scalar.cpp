#include "guardmark/kernels.hpp"

#include <cmath>

namespace guardmark::kernels {
namespace {

void add_s(const float* a, const float* b, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_s(const float* a, const float* b, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_s(const float* a, const float* b, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_s(float alpha, const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void scale_s(float alpha, const float* x, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i];
}

void clamp_s(const float* x, float lo, float hi, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        float v = x[i];
        if (v < lo) v = lo;
        if (v > hi) v = hi;
        out[i] = v;
    }
}

void relu_s(const float* x, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_s(const float* x, const float* dy, float* dx, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > 0.0f) dx[i] = dx[i] + dy[i];
    }
}

// 8 partial sums over lanes i%8, reduced as
// u[j] = s[j] + s[j+4]; w0 = u0 + u2; w1 = u1 + u3; r = w0 + w1;
// then a sequential tail. The AVX2 variant reduces in exactly this order.
float dot_s(const float* a, const float* b, std::size_t n) {
    float s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    std::size_t n8 = n / 8 * 8;
    for (std::size_t i = 0; i < n8; i += 8) {
        for (std::size_t l = 0; l < 8; ++l) s[l] = s[l] + a[i + l] * b[i + l];
    }
    float u0 = s[0] + s[4], u1 = s[1] + s[5], u2 = s[2] + s[6], u3 = s[3] + s[7];
    float r = (u0 + u2) + (u1 + u3);
    for (std::size_t i = n8; i < n; ++i) r = r + a[i] * b[i];
    return r;
}

// 4 partial sums in double, reduced as (s0+s2)+(s1+s3), then the tail.
double sum_f64_s(const float* x, std::size_t n) {
    double s[4] = {0, 0, 0, 0};
    std::size_t n4 = n / 4 * 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        for (std::size_t l = 0; l < 4; ++l) s[l] = s[l] + static_cast<double>(x[i + l]);
    }
    double r = (s[0] + s[2]) + (s[1] + s[3]);
    for (std::size_t i = n4; i < n; ++i) r = r + static_cast<double>(x[i]);
    return r;
}

double sumsq_f64_s(const float* x, std::size_t n) {
    double s[4] = {0, 0, 0, 0};
    std::size_t n4 = n / 4 * 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        for (std::size_t l = 0; l < 4; ++l) {
            double v = static_cast<double>(x[i + l]);
            s[l] = s[l] + v * v;
        }
    }
    double r = (s[0] + s[2]) + (s[1] + s[3]);
    for (std::size_t i = n4; i < n; ++i) {
        double v = static_cast<double>(x[i]);
        r = r + v * v;
    }
    return r;
}

// Accumulation over k is sequential per output element; the AVX2 variant
// vectorizes the j loop only, so per-element operation order matches.
void mm_s(const float* a, const float* b, float* c,
          std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    if (!accumulate) {
        for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0f;
    }
    for (std::size_t i = 0; i < m; ++i) {
        float* crow = c + i * n;
        for (std::size_t kk = 0; kk < k; ++kk) {
            float av = a[i * k + kk];
            const float* brow = b + kk * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] = crow[j] + av * brow[j];
        }
    }
}

void mm_abt_s(const float* a, const float* b, float* c,
              std::size_t m, std::size_t n, std::size_t p, bool accumulate) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            float d = dot_s(a + i * n, b + j * n, n);
            c[i * p + j] = accumulate ? c[i * p + j] + d : d;
        }
    }
}

void mm_atb_s(const float* a, const float* b, float* c,
              std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    if (!accumulate) {
        for (std::size_t i = 0; i < k * n; ++i) c[i] = 0.0f;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const float* brow = b + i * n;
        for (std::size_t j = 0; j < k; ++j) {
            float av = a[i * k + j];
            float* crow = c + j * n;
            for (std::size_t t = 0; t < n; ++t) crow[t] = crow[t] + av * brow[t];
        }
    }
}

bool has_nonfinite_s(const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x[i])) return true;
    }
    return false;
}

} // namespace

const Ops& scalar() {
    static const Ops ops{
        "scalar", add_s,  sub_s,     mul_s,      axpy_s,   scale_s,
        clamp_s,  relu_s, relu_bwd_s, dot_s,     sum_f64_s, sumsq_f64_s,
        mm_s,     mm_abt_s, mm_atb_s, has_nonfinite_s,
    };
    return ops;
}

} // namespace guardmark::kernels
