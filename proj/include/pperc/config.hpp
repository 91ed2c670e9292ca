#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pperc/kernels.hpp"
#include "pperc/lattice.hpp"
#include "pperc/model.hpp"

namespace pperc {

enum class SamplingMode : std::uint8_t { fixed_time, coupled_clock };

struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// Bit matrix with word-padded rows so each row can be filled by the bulk
// kernels directly.
class BitGrid {
  public:
    BitGrid() = default;
    BitGrid(std::uint32_t width, std::uint32_t height)
        : width_(width), height_(height), wpr_((width + 63) / 64),
          words_(std::size_t(wpr_) * height, 0) {}

    std::uint32_t width() const noexcept { return width_; }
    std::uint32_t height() const noexcept { return height_; }
    std::uint64_t* row(std::uint32_t iy) noexcept {
        return words_.data() + std::size_t(iy) * wpr_;
    }
    const std::uint64_t* row(std::uint32_t iy) const noexcept {
        return words_.data() + std::size_t(iy) * wpr_;
    }
    bool get(std::uint32_t ix, std::uint32_t iy) const noexcept {
        return (row(iy)[ix >> 6] >> (ix & 63)) & 1u;
    }
    void set(std::uint32_t ix, std::uint32_t iy, bool v) noexcept {
        std::uint64_t& w = row(iy)[ix >> 6];
        const std::uint64_t m = std::uint64_t(1) << (ix & 63);
        w = v ? (w | m) : (w & ~m);
    }
    std::uint64_t count_set() const noexcept;
    friend bool operator==(const BitGrid&, const BitGrid&) = default;

  private:
    std::uint32_t width_ = 0, height_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// Lazy fields: answer "is this edge open" straight from the counter hash,
// no storage. Field concept: open_h(x,y), open_v(x,y), window_radius().
// ---------------------------------------------------------------------------

// The inhomogeneous model; thresholds precomputed per doubled norm.
class RadialField {
  public:
    RadialField(const ModelParams& params, std::uint64_t seed)
        : params_(params), seed_(seed),
          thr_(params, params.window_radius) {}

    bool open_h(std::int32_t x, std::int32_t y) const noexcept {
        const std::int64_t d = std::max(std::abs(2 * std::int64_t(x) + 1),
                                        std::abs(2 * std::int64_t(y)));
        return kernels::detail::edge_open(seed_, x, y, 0, thr_.at(d));
    }
    bool open_v(std::int32_t x, std::int32_t y) const noexcept {
        const std::int64_t d = std::max(std::abs(2 * std::int64_t(x)),
                                        std::abs(2 * std::int64_t(y) + 1));
        return kernels::detail::edge_open(seed_, x, y, 1, thr_.at(d));
    }
    std::int32_t window_radius() const noexcept { return params_.window_radius; }
    const ModelParams& params() const noexcept { return params_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const RadialThresholds& thresholds() const noexcept { return thr_; }

  private:
    ModelParams params_;
    std::uint64_t seed_;
    RadialThresholds thr_;
};

// Homogeneous density p everywhere (the comparison model).
class HomogeneousField {
  public:
    HomogeneousField(double p, std::int32_t window_radius, std::uint64_t seed)
        : seed_(seed), thr_(rng::open_threshold(p)), radius_(window_radius) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("homogeneous p must be in [0,1]");
    }

    bool open_h(std::int32_t x, std::int32_t y) const noexcept {
        return kernels::detail::edge_open(seed_, x, y, 0, thr_);
    }
    bool open_v(std::int32_t x, std::int32_t y) const noexcept {
        return kernels::detail::edge_open(seed_, x, y, 1, thr_);
    }
    std::int32_t window_radius() const noexcept { return radius_; }
    std::uint64_t threshold() const noexcept { return thr_; }
    std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t thr_;
    std::int32_t radius_;
};

// ---------------------------------------------------------------------------
// Materialized configuration: open/closed state of every edge whose both
// endpoints lie in the window. Regenerating from (params, seed, mode) is
// bit-identical; storage is refused (CapacityError) above the caps.
// ---------------------------------------------------------------------------
class OpenConfiguration {
  public:
    static constexpr std::uint64_t kMaxEdges = std::uint64_t(1) << 31;
    static constexpr std::uint64_t kMaxClockEdges = std::uint64_t(1) << 27;

    static OpenConfiguration sample(const ModelParams& params,
                                    std::uint64_t seed, SamplingMode mode);
    // Homogeneous-density variant used by the comparison/oracle paths.
    static OpenConfiguration sample_homogeneous(double p,
                                                std::int32_t window_radius,
                                                std::uint64_t seed);

    const ModelParams& params() const noexcept { return params_; }
    std::uint64_t seed() const noexcept { return seed_; }
    SamplingMode mode() const noexcept { return mode_; }
    std::int32_t window_radius() const noexcept { return radius_; }
    bool homogeneous() const noexcept { return homogeneous_; }
    double homogeneous_p() const noexcept { return hom_p_; }

    // Field concept. Horizontal plane: x in [-M,M-1], y in [-M,M];
    // vertical: x in [-M,M], y in [-M,M-1].
    bool open_h(std::int32_t x, std::int32_t y) const noexcept {
        return h_.get(std::uint32_t(x + radius_), std::uint32_t(y + radius_));
    }
    bool open_v(std::int32_t x, std::int32_t y) const noexcept {
        return v_.get(std::uint32_t(x + radius_), std::uint32_t(y + radius_));
    }

    bool in_window_edge(const EdgeId& e) const noexcept;
    bool is_open(const EdgeId& e) const;         // throws if outside window
    double clock_value(const EdgeId& e) const;   // coupled_clock mode only

    std::uint64_t edge_count() const noexcept;
    std::uint64_t open_edge_count() const noexcept {
        return h_.count_set() + v_.count_set();
    }

    const BitGrid& horizontal_bits() const noexcept { return h_; }
    const BitGrid& vertical_bits() const noexcept { return v_; }

  private:
    ModelParams params_;
    std::uint64_t seed_ = 0;
    SamplingMode mode_ = SamplingMode::fixed_time;
    std::int32_t radius_ = 0;
    bool homogeneous_ = false;
    double hom_p_ = 0.0;
    BitGrid h_, v_;
};

// Dual pairing: the dual edge shares the midpoint of its primal partner and
// is open iff the primal edge is closed. Dual sites (a+1/2, b+1/2) are
// addressed by their lower-left corner (a,b).
//   dual H (a,b)->(a+1,b)  pairs  primal V (a+1, b)->(a+1, b+1)
//   dual V (a,b)->(a,b+1)  pairs  primal H (a,  b+1)->(a+1, b+1)
inline EdgeId dual_pair_of_primal(const EdgeId& e) noexcept {
    if (e.dir == EdgeDir::horizontal)   // midpoint (x+1/2, y)
        return {{e.site.x, e.site.y - 1}, EdgeDir::vertical};
    return {{e.site.x - 1, e.site.y}, EdgeDir::horizontal};  // midpoint (x, y+1/2)
}
inline EdgeId primal_pair_of_dual(const EdgeId& d) noexcept {
    if (d.dir == EdgeDir::vertical)
        return {{d.site.x, d.site.y + 1}, EdgeDir::horizontal};
    return {{d.site.x + 1, d.site.y}, EdgeDir::vertical};
}

// View of the dual configuration induced by a primal field.
template <class Field>
class DualField {
  public:
    explicit DualField(const Field& primal) noexcept : primal_(primal) {}

    bool open_h(std::int32_t a, std::int32_t b) const noexcept {
        return !primal_.open_v(a + 1, b);
    }
    bool open_v(std::int32_t a, std::int32_t b) const noexcept {
        return !primal_.open_h(a, b + 1);
    }
    const Field& primal() const noexcept { return primal_; }

  private:
    const Field& primal_;
};

}  // namespace pperc
