#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace pperc {

struct Site {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Site&, const Site&) = default;
};

enum class EdgeDir : std::uint8_t { horizontal = 0, vertical = 1 };

// Canonical edge id: the edge from `site` to site+e1 (horizontal) or
// site+e2 (vertical). Every lattice edge has exactly one such id.
struct EdgeId {
    Site site;
    EdgeDir dir = EdgeDir::horizontal;

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

// Midpoints have exactly one half-integer coordinate, so all norm arithmetic
// is done on doubled coordinates, which are integers.
inline std::int64_t doubled_midpoint_norm(const EdgeId& e) noexcept {
    const std::int64_t tx = 2 * std::int64_t(e.site.x);
    const std::int64_t ty = 2 * std::int64_t(e.site.y);
    if (e.dir == EdgeDir::horizontal)
        return std::max(std::abs(tx + 1), std::abs(ty));
    return std::max(std::abs(tx), std::abs(ty + 1));
}

// L-infinity norm of the edge midpoint; always >= 1/2.
inline double edge_midpoint_norm(const EdgeId& e) noexcept {
    return double(doubled_midpoint_norm(e)) * 0.5;
}

inline std::int32_t site_norm(const Site& s) noexcept {
    return std::max(std::abs(s.x), std::abs(s.y));
}

// Square window R(0,M) of lattice sites. Site indices are row-major over
// [-M,M]^2. The radius cap keeps a site index inside 32 bits and packed
// (x,y) pairs inside 16 bits per coordinate.
class Window {
  public:
    static constexpr std::int32_t kMaxRadius = 32767;

    explicit Window(std::int32_t radius) : radius_(radius) {
        if (radius < 1 || radius > kMaxRadius)
            throw std::invalid_argument("window radius out of range [1, 32767]");
        width_ = 2 * radius + 1;
    }

    std::int32_t radius() const noexcept { return radius_; }
    std::int32_t width() const noexcept { return width_; }
    std::uint64_t site_count() const noexcept {
        return std::uint64_t(width_) * width_;
    }
    bool contains(std::int32_t x, std::int32_t y) const noexcept {
        return x >= -radius_ && x <= radius_ && y >= -radius_ && y <= radius_;
    }
    std::uint32_t site_index(std::int32_t x, std::int32_t y) const noexcept {
        return std::uint32_t(y + radius_) * std::uint32_t(width_) +
               std::uint32_t(x + radius_);
    }

  private:
    std::int32_t radius_;
    std::int32_t width_;
};

// One bit per site of a window; reused across replicates.
class SiteBits {
  public:
    void resize(std::uint64_t bits) {
        words_.assign((bits + 63) / 64, 0);
        bits_ = bits;
    }
    void clear() { std::fill(words_.begin(), words_.end(), std::uint64_t(0)); }
    std::uint64_t size() const noexcept { return bits_; }

    bool test(std::uint64_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::uint64_t i) noexcept {
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    bool test_and_set(std::uint64_t i) noexcept {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        const bool was = w & m;
        w |= m;
        return was;
    }

  private:
    std::vector<std::uint64_t> words_;
    std::uint64_t bits_ = 0;
};

}  // namespace pperc
