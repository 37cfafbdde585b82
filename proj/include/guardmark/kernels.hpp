#pragma once

#include <cstddef>

// Dense f32 inner loops used by the tensor layer. Two implementations are
// provided: a scalar reference and an AVX2 variant selected at runtime.
// Both follow the same accumulation blocking (8-lane for f32 reductions,
// 4-lane for f64) and the same reduction tree, so outputs are bit-identical
// across implementations. Floating-point contraction is disabled for these
// translation units; keep explicit mul+add, never fma, when editing.

namespace guardmark::kernels {

struct Ops {
    const char* name;

    void (*add)(const float* a, const float* b, float* out, std::size_t n);
    void (*sub)(const float* a, const float* b, float* out, std::size_t n);
    void (*mul)(const float* a, const float* b, float* out, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(float alpha, const float* x, float* y, std::size_t n);
    void (*scale)(float alpha, const float* x, float* out, std::size_t n);
    void (*clamp)(const float* x, float lo, float hi, float* out, std::size_t n);
    void (*relu)(const float* x, float* out, std::size_t n);
    // dx[i] += (x[i] > 0) ? dy[i] : 0
    void (*relu_bwd)(const float* x, const float* dy, float* dx, std::size_t n);

    // Blocked-8 f32 dot product (fixed reduction tree).
    float (*dot)(const float* a, const float* b, std::size_t n);
    // Blocked-4 f64 reductions over f32 data.
    double (*sum_f64)(const float* x, std::size_t n);
    double (*sumsq_f64)(const float* x, std::size_t n);

    // C[m,n] (+)= A[m,k] * B[k,n], row-major.
    void (*mm)(const float* a, const float* b, float* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);
    // C[m,p] (+)= A[m,n] * B[p,n]^T  (row-row dots).
    void (*mm_abt)(const float* a, const float* b, float* c,
                   std::size_t m, std::size_t n, std::size_t p, bool accumulate);
    // C[k,n] (+)= A[m,k]^T * B[m,n]  (row axpys).
    void (*mm_atb)(const float* a, const float* b, float* c,
                   std::size_t m, std::size_t k, std::size_t n, bool accumulate);

    bool (*has_nonfinite)(const float* x, std::size_t n);
};

const Ops& scalar();
// nullptr when the CPU lacks AVX2.
const Ops* avx2();

// Runtime-selected implementation. GUARDMARK_KERNELS=scalar|avx2 overrides;
// an avx2 request on unsupported hardware falls back to scalar.
const Ops& active();

} // namespace guardmark::kernels
