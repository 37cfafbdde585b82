#include "guardmark/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace guardmark::kernels {

#ifdef GUARDMARK_HAVE_AVX2_TU
const Ops* avx2_impl_table();
#endif

const Ops* avx2() {
#ifdef GUARDMARK_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2")) return avx2_impl_table();
#endif
    return nullptr;
}

const Ops& active() {
    static const Ops* chosen = [] {
        const char* env = std::getenv("GUARDMARK_KERNELS");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar();
        const Ops* v = avx2();
        return v != nullptr ? v : &scalar();
    }();
    return *chosen;
}

} // namespace guardmark::kernels
