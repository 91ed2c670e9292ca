#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "pperc/kernels.hpp"

namespace pperc::kernels {

namespace {

bool detect_avx2() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl initial_impl() noexcept {
    const char* env = std::getenv("PPERC_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return Impl::scalar;
    return detect_avx2() ? Impl::avx2 : Impl::scalar;
}

Impl g_impl = initial_impl();

}  // namespace

bool cpu_supports_avx2() noexcept { return detect_avx2(); }

Impl active() noexcept { return g_impl; }

void force(Impl impl) {
    if (impl == Impl::avx2 && !detect_avx2())
        throw std::runtime_error("AVX2 kernels requested but unsupported by CPU");
    g_impl = impl;
}

void reset_to_auto() noexcept { g_impl = initial_impl(); }

void sample_row_radial(std::uint64_t seed, std::int32_t x0, std::int32_t y,
                       int dir, std::uint32_t count,
                       const std::uint64_t* thr_by_d, std::uint64_t* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_impl == Impl::avx2) {
        detail::sample_row_radial_avx2(seed, x0, y, dir, count, thr_by_d, out);
        return;
    }
#endif
    detail::sample_row_radial_scalar(seed, x0, y, dir, count, thr_by_d, out);
}

void sample_row_const(std::uint64_t seed, std::int32_t x0, std::int32_t y,
                      int dir, std::uint32_t count, std::uint64_t thr,
                      std::uint64_t* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_impl == Impl::avx2) {
        detail::sample_row_const_avx2(seed, x0, y, dir, count, thr, out);
        return;
    }
#endif
    detail::sample_row_const_scalar(seed, x0, y, dir, count, thr, out);
}

}  // namespace pperc::kernels
