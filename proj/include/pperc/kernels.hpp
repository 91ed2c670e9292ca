#pragma once

#include <cstdint>

#include "pperc/rng.hpp"

// Bulk edge-sampling kernels. Sampling a row of edges is a pure integer
// loop (counter hash + threshold compare), so it carries a SIMD variant
// selected at runtime. Both variants produce bit-identical output; the
// scalar path is the reference the AVX2 path is tested against.

namespace pperc::kernels {

enum class Impl { scalar, avx2 };

// Implementation selected for this process (AVX2 when the CPU supports it,
// unless forced otherwise).
Impl active() noexcept;
// Force a specific implementation; throws if unsupported on this CPU.
void force(Impl impl);
void reset_to_auto() noexcept;
bool cpu_supports_avx2() noexcept;

// Open bits for `count` edges (x0..x0+count-1, y, dir) of the radial model.
// thr_by_d is indexed by the doubled midpoint norm. Bits are written LSB
// first starting at out[0] bit 0.
void sample_row_radial(std::uint64_t seed, std::int32_t x0, std::int32_t y,
                       int dir, std::uint32_t count,
                       const std::uint64_t* thr_by_d, std::uint64_t* out);

// Same, with one threshold for the whole row (homogeneous or y-profile
// fields).
void sample_row_const(std::uint64_t seed, std::int32_t x0, std::int32_t y,
                      int dir, std::uint32_t count, std::uint64_t thr,
                      std::uint64_t* out);

namespace detail {

// Single-edge reference test; the scalar kernels and all lazy field views
// are thin wrappers around this.
inline bool edge_open(std::uint64_t seed, std::int32_t x, std::int32_t y,
                      int dir, std::uint64_t thr) noexcept {
    return (rng::edge_raw(seed, x, y, dir) >> 11) < thr;
}

void sample_row_radial_scalar(std::uint64_t seed, std::int32_t x0,
                              std::int32_t y, int dir, std::uint32_t count,
                              const std::uint64_t* thr_by_d,
                              std::uint64_t* out);
void sample_row_const_scalar(std::uint64_t seed, std::int32_t x0,
                             std::int32_t y, int dir, std::uint32_t count,
                             std::uint64_t thr, std::uint64_t* out);
#if defined(__x86_64__) || defined(_M_X64)
void sample_row_radial_avx2(std::uint64_t seed, std::int32_t x0,
                            std::int32_t y, int dir, std::uint32_t count,
                            const std::uint64_t* thr_by_d, std::uint64_t* out);
void sample_row_const_avx2(std::uint64_t seed, std::int32_t x0, std::int32_t y,
                           int dir, std::uint32_t count, std::uint64_t thr,
                           std::uint64_t* out);
#endif

}  // namespace detail

}  // namespace pperc::kernels
