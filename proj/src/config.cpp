#include "pperc/config.hpp"

#include <bit>

namespace pperc {

std::uint64_t BitGrid::count_set() const noexcept {
    std::uint64_t n = 0;
    for (const std::uint64_t w : words_) n += std::uint64_t(std::popcount(w));
    return n;
}

namespace {

std::uint64_t window_edge_count(std::int32_t m) noexcept {
    // horizontal: 2M*(2M+1); vertical: same by symmetry
    return 2 * std::uint64_t(2 * m) * std::uint64_t(2 * m + 1);
}

void check_capacity(std::int32_t m, SamplingMode mode) {
    const std::uint64_t edges = window_edge_count(m);
    const std::uint64_t cap = (mode == SamplingMode::coupled_clock)
                                  ? OpenConfiguration::kMaxClockEdges
                                  : OpenConfiguration::kMaxEdges;
    if (edges > cap)
        throw CapacityError(
            "window radius " + std::to_string(m) + " needs " +
            std::to_string(edges) +
            " stored edges, above the materialization cap; use the lazy field "
            "paths for windows this large");
}

}  // namespace

OpenConfiguration OpenConfiguration::sample(const ModelParams& params,
                                            std::uint64_t seed,
                                            SamplingMode mode) {
    params.validate();
    const std::int32_t m = params.window_radius;
    if (m > Window::kMaxRadius)
        throw CapacityError("window radius exceeds addressable maximum 32767");
    check_capacity(m, mode);

    OpenConfiguration c;
    c.params_ = params;
    c.seed_ = seed;
    c.mode_ = mode;
    c.radius_ = m;
    const std::uint32_t w = std::uint32_t(2 * m + 1);
    c.h_ = BitGrid(w - 1, w);
    c.v_ = BitGrid(w, w - 1);

    const RadialThresholds thr(params, m);
    for (std::int32_t y = -m; y <= m; ++y)
        kernels::sample_row_radial(seed, -m, y, 0, w - 1, thr.data(),
                                   c.h_.row(std::uint32_t(y + m)));
    for (std::int32_t y = -m; y < m; ++y)
        kernels::sample_row_radial(seed, -m, y, 1, w, thr.data(),
                                   c.v_.row(std::uint32_t(y + m)));
    return c;
}

OpenConfiguration OpenConfiguration::sample_homogeneous(
    double p, std::int32_t window_radius, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("homogeneous p must be in [0,1]");
    if (window_radius < 1) throw std::invalid_argument("window_radius >= 1");
    if (window_radius > Window::kMaxRadius)
        throw CapacityError("window radius exceeds addressable maximum 32767");
    check_capacity(window_radius, SamplingMode::fixed_time);

    OpenConfiguration c;
    c.params_ = ModelParams{1.0, 0.0, window_radius};
    c.seed_ = seed;
    c.mode_ = SamplingMode::fixed_time;
    c.radius_ = window_radius;
    c.homogeneous_ = true;
    c.hom_p_ = p;
    const std::int32_t m = window_radius;
    const std::uint32_t w = std::uint32_t(2 * m + 1);
    c.h_ = BitGrid(w - 1, w);
    c.v_ = BitGrid(w, w - 1);

    const std::uint64_t thr = rng::open_threshold(p);
    for (std::int32_t y = -m; y <= m; ++y)
        kernels::sample_row_const(seed, -m, y, 0, w - 1, thr,
                                  c.h_.row(std::uint32_t(y + m)));
    for (std::int32_t y = -m; y < m; ++y)
        kernels::sample_row_const(seed, -m, y, 1, w, thr,
                                  c.v_.row(std::uint32_t(y + m)));
    return c;
}

bool OpenConfiguration::in_window_edge(const EdgeId& e) const noexcept {
    const std::int32_t m = radius_;
    const auto [x, y] = e.site;
    if (e.dir == EdgeDir::horizontal)
        return x >= -m && x < m && y >= -m && y <= m;
    return x >= -m && x <= m && y >= -m && y < m;
}

bool OpenConfiguration::is_open(const EdgeId& e) const {
    if (!in_window_edge(e))
        throw std::out_of_range("edge outside the sampled window");
    return e.dir == EdgeDir::horizontal ? open_h(e.site.x, e.site.y)
                                        : open_v(e.site.x, e.site.y);
}

double OpenConfiguration::clock_value(const EdgeId& e) const {
    if (mode_ != SamplingMode::coupled_clock)
        throw std::logic_error("clock values exist only in coupled_clock mode");
    if (!in_window_edge(e))
        throw std::out_of_range("edge outside the sampled window");
    return rng::edge_clock(seed_, e.site.x, e.site.y,
                           e.dir == EdgeDir::horizontal ? 0 : 1);
}

std::uint64_t OpenConfiguration::edge_count() const noexcept {
    return window_edge_count(radius_);
}

}  // namespace pperc
