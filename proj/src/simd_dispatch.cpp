#include "combgas/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace combgas::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Kernels& choose() {
    const char* force = std::getenv("COMBGAS_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return detail::scalar_table;
    if (detail::avx2_table && cpu_has_avx2()) return *detail::avx2_table;
    return detail::scalar_table;
}

}  // namespace

const Kernels& scalar_kernels() { return detail::scalar_table; }

const Kernels* avx2_kernels() {
    if (detail::avx2_table && cpu_has_avx2()) return detail::avx2_table;
    return nullptr;
}

const Kernels& active() {
    static const Kernels& k = choose();
    return k;
}

}  // namespace combgas::simd
