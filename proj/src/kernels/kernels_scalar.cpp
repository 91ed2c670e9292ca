#include <algorithm>
#include <cstring>

#include "pperc/kernels.hpp"

namespace pperc::kernels::detail {

namespace {

// Doubled midpoint norm of edge (x,y,dir): max(|2x+1|,|2y|) horizontal,
// max(|2x|,|2y+1|) vertical.
inline std::int64_t doubled_norm(std::int32_t x, std::int32_t y,
                                 int dir) noexcept {
    const std::int64_t a = 2 * std::int64_t(x) + (dir == 0 ? 1 : 0);
    const std::int64_t b = 2 * std::int64_t(y) + (dir == 0 ? 0 : 1);
    return std::max(std::abs(a), std::abs(b));
}

}  // namespace

void sample_row_radial_scalar(std::uint64_t seed, std::int32_t x0,
                              std::int32_t y, int dir, std::uint32_t count,
                              const std::uint64_t* thr_by_d,
                              std::uint64_t* out) {
    std::memset(out, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::int32_t x = x0 + std::int32_t(i);
        const std::uint64_t thr = thr_by_d[doubled_norm(x, y, dir)];
        if (edge_open(seed, x, y, dir, thr))
            out[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
}

void sample_row_const_scalar(std::uint64_t seed, std::int32_t x0,
                             std::int32_t y, int dir, std::uint32_t count,
                             std::uint64_t thr, std::uint64_t* out) {
    std::memset(out, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::int32_t x = x0 + std::int32_t(i);
        if (edge_open(seed, x, y, dir, thr))
            out[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
}

}  // namespace pperc::kernels::detail
