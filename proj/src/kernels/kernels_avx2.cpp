// AVX2 variants of the edge-sampling kernels; compiled with -mavx2 only.
// Must produce bit-identical output to the scalar reference: same hash, same
// thresholds, pure integer arithmetic, 4 edges per iteration.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

#include "pperc/kernels.hpp"

namespace pperc::kernels::detail {

namespace {

inline __m256i splat64(std::uint64_t v) noexcept {
    return _mm256_set1_epi64x(std::int64_t(v));
}

// 64-bit low multiply from 32-bit pieces (AVX2 has no vpmullq).
inline __m256i mul64(__m256i a, __m256i b) noexcept {
    const __m256i bswap = _mm256_shuffle_epi32(b, 0xB1);
    const __m256i prodlh = _mm256_mullo_epi32(a, bswap);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i prodlh2 = _mm256_hadd_epi32(prodlh, zero);
    const __m256i prodlh3 = _mm256_shuffle_epi32(prodlh2, 0x73);
    const __m256i prodll = _mm256_mul_epu32(a, b);
    return _mm256_add_epi64(prodll, prodlh3);
}

inline __m256i mix64v(__m256i z) noexcept {
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mul64(z, splat64(0xBF58476D1CE4E5B9ull));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mul64(z, splat64(0x94D049BB133111EBull));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
    return z;
}

inline __m256i abs64(__m256i a) noexcept {
    const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), a);
    return _mm256_sub_epi64(_mm256_xor_si256(a, neg), neg);
}

// h53 lanes for edges (x0+i.., y, dir); all values fit in 53 bits so the
// later signed compare is safe.
struct HashRow {
    __m256i key;    // ((uint32)x << 32) | (uint32)y, per lane
    __m256i seedv;
    __m256i dirgamma;

    HashRow(std::uint64_t seed, std::int32_t x0, std::int32_t y,
            int dir) noexcept {
        const std::uint64_t key0 =
            (std::uint64_t(std::uint32_t(x0)) << 32) | std::uint32_t(y);
        key = _mm256_add_epi64(
            splat64(key0),
            _mm256_set_epi64x(3ll << 32, 2ll << 32, 1ll << 32, 0));
        seedv = splat64(seed);
        dirgamma = splat64(std::uint64_t(dir) * rng::kGolden);
    }

    __m256i next_h53() noexcept {
        const __m256i inner = mix64v(_mm256_add_epi64(key, dirgamma));
        const __m256i h = mix64v(_mm256_xor_si256(seedv, inner));
        key = _mm256_add_epi64(key, splat64(4ull << 32));
        return _mm256_srli_epi64(h, 11);
    }
};

inline std::uint32_t open_mask(__m256i thr, __m256i h53) noexcept {
    const __m256i open = _mm256_cmpgt_epi64(thr, h53);
    return std::uint32_t(_mm256_movemask_pd(_mm256_castsi256_pd(open)));
}

}  // namespace

void sample_row_radial_avx2(std::uint64_t seed, std::int32_t x0,
                            std::int32_t y, int dir, std::uint32_t count,
                            const std::uint64_t* thr_by_d,
                            std::uint64_t* out) {
    std::memset(out, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
    const std::int64_t dx = (dir == 0) ? 1 : 0;
    const std::int64_t dy = (dir == 0) ? 0 : 1;
    const std::int64_t b = std::abs(2 * std::int64_t(y) + dy);
    const __m256i bvec = splat64(std::uint64_t(b));

    HashRow row(seed, x0, y, dir);
    // doubled |2x+dx| lanes, stepping by 8 per iteration of 4 edges
    __m256i a = _mm256_add_epi64(splat64(std::uint64_t(2 * std::int64_t(x0) + dx)),
                                 _mm256_set_epi64x(6, 4, 2, 0));

    std::uint32_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i h53 = row.next_h53();
        const __m256i aa = abs64(a);
        const __m256i takea = _mm256_cmpgt_epi64(aa, bvec);
        const __m256i d = _mm256_blendv_epi8(bvec, aa, takea);
        const __m256i thr = _mm256_i64gather_epi64(
            reinterpret_cast<const long long*>(thr_by_d), d, 8);
        out[i >> 6] |= std::uint64_t(open_mask(thr, h53)) << (i & 63);
        a = _mm256_add_epi64(a, splat64(8));
    }
    for (; i < count; ++i) {
        const std::int32_t x = x0 + std::int32_t(i);
        const std::int64_t ax = std::abs(2 * std::int64_t(x) + dx);
        const std::uint64_t thr = thr_by_d[std::max(ax, b)];
        if (edge_open(seed, x, y, dir, thr))
            out[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
}

void sample_row_const_avx2(std::uint64_t seed, std::int32_t x0, std::int32_t y,
                           int dir, std::uint32_t count, std::uint64_t thr,
                           std::uint64_t* out) {
    std::memset(out, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
    const __m256i thrv = splat64(thr);
    HashRow row(seed, x0, y, dir);

    std::uint32_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i h53 = row.next_h53();
        out[i >> 6] |= std::uint64_t(open_mask(thrv, h53)) << (i & 63);
    }
    for (; i < count; ++i) {
        const std::int32_t x = x0 + std::int32_t(i);
        if (edge_open(seed, x, y, dir, thr))
            out[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
}

}  // namespace pperc::kernels::detail

#endif  // x86_64
