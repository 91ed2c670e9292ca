#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pperc/config.hpp"
#include "pperc/lattice.hpp"
#include "pperc/model.hpp"
#include "pperc/stats.hpp"

namespace pperc {

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Union-find over window sites (path halving + union by rank).
// ---------------------------------------------------------------------------
class DisjointSetForest {
  public:
    explicit DisjointSetForest(std::uint32_t n) : parent_(n), rank_(n, 0) {
        for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::uint32_t find(std::uint32_t i) noexcept {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];  // path halving
            i = parent_[i];
        }
        return i;
    }

    bool unite(std::uint32_t a, std::uint32_t b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    std::size_t size() const noexcept { return parent_.size(); }

  private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
};

// Site -> cluster label; the label of a cluster is the smallest site index
// it contains, so labelings are reproducible.
struct ClusterLabeling {
    std::int32_t window_radius = 0;
    std::vector<std::uint32_t> label;

    Window window() const { return Window(window_radius); }
    std::uint32_t label_of(std::int32_t x, std::int32_t y) const {
        return label[Window(window_radius).site_index(x, y)];
    }
};

ClusterLabeling build_clusters(const OpenConfiguration& config);

struct BoundingBox {
    std::int32_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

struct ClusterStats {
    std::uint64_t size = 1;      // sites, not edges
    std::int32_t radius = 0;     // max L-inf norm of member sites
    BoundingBox bbox;
    bool truncated = false;      // cluster touches the window boundary
    std::vector<Site> member_sites;  // filled only on request
};

ClusterStats origin_cluster(const ClusterLabeling& labeling,
                            bool collect_sites = false);

// ---------------------------------------------------------------------------
// Origin-cluster exploration on any field (lazy or materialized). This is
// the large-window route; it must agree site-for-site with the union-find
// labeling wherever both apply.
// ---------------------------------------------------------------------------
class ClusterWorkspace {
  public:
    void ensure(std::int32_t radius) {
        const std::uint64_t n =
            (2 * std::uint64_t(radius) + 1) * (2 * std::uint64_t(radius) + 1);
        if (n != visited_.size()) visited_.resize(n);
        visited_.clear();
        cur_.clear();
        nxt_.clear();
    }

    SiteBits visited_;
    std::vector<std::uint32_t> cur_, nxt_;
};

struct ExploreOptions {
    std::int32_t stop_norm = -1;  // early exit when a site of this norm is hit
    bool collect_sites = false;
};

struct ExploreResult {
    ClusterStats stats;
    bool reached_stop_norm = false;
};

struct NoopVisit {
    void operator()(std::int32_t, std::int32_t) const noexcept {}
};

template <class Field, class OnVisit = NoopVisit>
ExploreResult explore_origin_cluster(const Field& field, ClusterWorkspace& ws,
                                     const ExploreOptions& opt = {},
                                     OnVisit&& on_visit = {}) {
    const std::int32_t m = field.window_radius();
    ws.ensure(m);
    const std::uint32_t w = std::uint32_t(2 * m + 1);

    ExploreResult res;
    ClusterStats& st = res.stats;
    st.size = 0;
    st.radius = 0;
    st.bbox = {0, 0, 0, 0};

    auto visit = [&](std::uint32_t xx, std::uint32_t yy) {
        const std::uint64_t idx = std::uint64_t(yy) * w + xx;
        if (ws.visited_.test_and_set(idx)) return;
        ws.nxt_.push_back(xx | (yy << 16));
        const std::int32_t x = std::int32_t(xx) - m;
        const std::int32_t y = std::int32_t(yy) - m;
        ++st.size;
        const std::int32_t norm = std::max(std::abs(x), std::abs(y));
        if (norm > st.radius) st.radius = norm;
        if (x < st.bbox.min_x) st.bbox.min_x = x;
        if (x > st.bbox.max_x) st.bbox.max_x = x;
        if (y < st.bbox.min_y) st.bbox.min_y = y;
        if (y > st.bbox.max_y) st.bbox.max_y = y;
        if (norm == m) st.truncated = true;
        if (opt.collect_sites) st.member_sites.push_back({x, y});
        on_visit(x, y);
        if (norm == opt.stop_norm) res.reached_stop_norm = true;
    };

    visit(std::uint32_t(m), std::uint32_t(m));  // origin
    std::swap(ws.cur_, ws.nxt_);
    while (!ws.cur_.empty() && !res.reached_stop_norm) {
        for (const std::uint32_t pk : ws.cur_) {
            const std::uint32_t xx = pk & 0xFFFFu;
            const std::uint32_t yy = pk >> 16;
            const std::int32_t x = std::int32_t(xx) - m;
            const std::int32_t y = std::int32_t(yy) - m;
            if (xx + 1 < w && field.open_h(x, y)) visit(xx + 1, yy);
            if (xx > 0 && field.open_h(x - 1, y)) visit(xx - 1, yy);
            if (yy + 1 < w && field.open_v(x, y)) visit(xx, yy + 1);
            if (yy > 0 && field.open_v(x, y - 1)) visit(xx, yy - 1);
            if (res.reached_stop_norm) break;
        }
        ws.cur_.clear();
        std::swap(ws.cur_, ws.nxt_);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Containment statistic (the Theorem-1 event).
// ---------------------------------------------------------------------------
struct ContainmentReport {
    double epsilon = 0.0;
    double n_minus = 0.0;          // n(p_c - epsilon, t)
    std::int32_t escape_norm = 0;  // max site norm in the origin cluster
    bool contained = false;
};

inline ContainmentReport containment_check(const ClusterStats& stats,
                                           double epsilon,
                                           const ModelParams& params) {
    if (!(epsilon > 0.0 && epsilon < kPc))
        throw std::invalid_argument("epsilon must be in (0, p_c)");
    ContainmentReport r;
    r.epsilon = epsilon;
    r.n_minus = characteristic_radius(kPc - epsilon, params).value;
    if (double(params.window_radius) <= r.n_minus)
        throw WindowError(
            "window radius must exceed n(p_c - eps, t) to certify containment");
    r.escape_norm = stats.radius;
    r.contained = double(r.escape_norm) <= r.n_minus;
    return r;
}

// Diagnostic for the annulus event: an open path from norm N to norm
// N + width inside the annulus (the complementary event of Theorem 1's
// proof). Not a pass/fail statistic.
template <class Field>
bool annulus_crossing(const Field& field, std::int32_t inner_norm,
                      std::int32_t outer_norm);

// ---------------------------------------------------------------------------
// Subcritical radius tail P(rad >= k) with fitted exponential decay rate.
// ---------------------------------------------------------------------------
struct RadiusTail {
    double p = 0.0;
    std::int32_t k_max = 0;
    std::uint64_t replicates = 0;
    std::vector<std::uint64_t> survivors;  // survivors[k] = #{rad >= k}
    std::vector<double> tail;              // survivors / replicates
    double gamma_hat = 0.0;                // fitted decay rate (-slope)
    double intercept = 0.0;                // fitted log C
    double r2 = 0.0;
    std::int32_t fit_k_lo = 0, fit_k_hi = 0;
};

RadiusTail cluster_radius_tail(double p, std::int32_t k_max, int replicates,
                               std::uint64_t seed, int threads = 0,
                               std::uint64_t min_fit_count = 50);

// --- template implementation ---

template <class Field>
bool annulus_crossing(const Field& field, std::int32_t inner_norm,
                      std::int32_t outer_norm) {
    const std::int32_t m = field.window_radius();
    if (outer_norm > m || inner_norm < 1 || inner_norm >= outer_norm)
        throw WindowError("annulus outside window");
    const std::uint32_t w = std::uint32_t(2 * m + 1);
    SiteBits visited;
    visited.resize(std::uint64_t(w) * w);
    std::vector<std::uint32_t> cur, nxt;
    bool reached = false;

    auto in_annulus = [&](std::int32_t x, std::int32_t y) {
        const std::int32_t norm = std::max(std::abs(x), std::abs(y));
        return norm >= inner_norm && norm <= outer_norm;
    };
    auto visit = [&](std::int32_t x, std::int32_t y) {
        const std::uint64_t idx =
            std::uint64_t(std::uint32_t(y + m)) * w + std::uint32_t(x + m);
        if (visited.test_and_set(idx)) return;
        nxt.push_back(std::uint32_t(x + m) | (std::uint32_t(y + m) << 16));
        if (std::max(std::abs(x), std::abs(y)) == outer_norm) reached = true;
    };

    // sources: every site at the inner norm
    for (std::int32_t x = -inner_norm; x <= inner_norm; ++x) {
        visit(x, -inner_norm);
        visit(x, inner_norm);
    }
    for (std::int32_t y = -inner_norm + 1; y < inner_norm; ++y) {
        visit(-inner_norm, y);
        visit(inner_norm, y);
    }

    while (!nxt.empty() && !reached) {
        cur.swap(nxt);
        nxt.clear();
        for (const std::uint32_t pk : cur) {
            const std::int32_t x = std::int32_t(pk & 0xFFFFu) - m;
            const std::int32_t y = std::int32_t(pk >> 16) - m;
            auto step = [&](std::int32_t nx, std::int32_t ny, bool open) {
                if (open && in_annulus(nx, ny)) visit(nx, ny);
            };
            step(x + 1, y, x + 1 <= m && field.open_h(x, y));
            step(x - 1, y, x - 1 >= -m && field.open_h(x - 1, y));
            step(x, y + 1, y + 1 <= m && field.open_v(x, y));
            step(x, y - 1, y - 1 >= -m && field.open_v(x, y - 1));
        }
    }
    return reached;
}

}  // namespace pperc
