#pragma once

#include <cstdint>

// Counter-based randomness. Every random quantity in the project is a pure
// function of (seed, key), so sampling is order-independent and identical
// across any number of worker threads.

namespace pperc::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 output function (Stafford mix13). Full 64-bit avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Child stream seed for (tag, index) under a root seed. Tags keep the
// replicate streams of different experiments disjoint.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag,
                               std::uint64_t index) noexcept {
    return mix64(mix64(seed ^ mix64(tag)) + index * kGolden);
}

// Raw 64-bit draw for the edge with canonical endpoint (x,y) and direction
// dir (0 = horizontal, 1 = vertical). The inner mix decorrelates the packed
// coordinates before the seed enters.
constexpr std::uint64_t edge_raw(std::uint64_t seed, std::int32_t x,
                                 std::int32_t y, int dir) noexcept {
    const std::uint64_t key =
        (std::uint64_t(std::uint32_t(x)) << 32) | std::uint32_t(y);
    return mix64(seed ^ mix64(key + std::uint64_t(dir) * kGolden));
}

inline constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53

// Uniform clock mark in [0,1) for an edge; 53 significant bits.
constexpr double edge_clock(std::uint64_t seed, std::int32_t x, std::int32_t y,
                            int dir) noexcept {
    return double(edge_raw(seed, x, y, dir) >> 11) * kInv53;
}

// The edge is open iff (edge_raw >> 11) < open_threshold(p); this is
// bit-identical to edge_clock < p because scaling a double by 2^53 is exact.
inline std::uint64_t open_threshold(double p) noexcept {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return std::uint64_t(1) << 53;
    const double scaled = p * 9007199254740992.0;
    auto t = std::uint64_t(scaled);
    if (double(t) < scaled) ++t;  // ceil
    return t;
}

// Sequential SplitMix64 stream for draws that have no natural lattice key
// (rainstick drops, synthetic test data).
class Stream {
  public:
    explicit constexpr Stream(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGolden;
        return mix64(state_);
    }
    // [0,1)
    constexpr double next_unit() noexcept {
        return double(next_u64() >> 11) * kInv53;
    }
    // (0,1]; safe as a log() argument
    constexpr double next_unit_pos() noexcept {
        return double((next_u64() >> 11) + 1) * kInv53;
    }

  private:
    std::uint64_t state_;
};

}  // namespace pperc::rng
