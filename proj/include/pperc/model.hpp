#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pperc/lattice.hpp"
#include "pperc/rng.hpp"

namespace pperc {

// Critical probability for bond percolation on the square lattice.
inline constexpr double kPc = 0.5;

// Inhomogeneous model parameters: the edge with midpoint x is open at time t
// with probability rho(x,t) = 1 - exp(-t * |x|^-alpha), |.| the L-inf norm.
struct ModelParams {
    double alpha = 1.0;
    double time = 0.0;
    std::int32_t window_radius = 1;

    void validate() const {
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
        if (!(time >= 0.0)) throw std::invalid_argument("time must be >= 0");
        if (window_radius < 1)
            throw std::invalid_argument("window_radius must be >= 1");
    }
};

// rho(x,t) as a function of the midpoint norm r > 0.
inline double rho_at_norm(double r, double alpha, double t) noexcept {
    return -std::expm1(-t * std::pow(r, -alpha));
}

inline double open_probability(const EdgeId& e, const ModelParams& p) noexcept {
    return rho_at_norm(edge_midpoint_norm(e), p.alpha, p.time);
}

// n(p,t) = c_{p,alpha} t^{1/alpha}: the largest norm at which edges are open
// with probability >= p.
struct CharacteristicRadius {
    double p = 0.0;
    double value = 0.0;        // n(p,t)
    double coefficient = 0.0;  // c_{p,alpha} = (-log(1-p))^{-1/alpha}
};

inline CharacteristicRadius characteristic_radius(double p, double alpha,
                                                  double t) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("characteristic_radius: p must be in (0,1)");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
    CharacteristicRadius r;
    r.p = p;
    r.coefficient = std::pow(-std::log1p(-p), -1.0 / alpha);
    r.value = r.coefficient * std::pow(t, 1.0 / alpha);
    return r;
}

inline CharacteristicRadius characteristic_radius(double p,
                                                  const ModelParams& mp) {
    return characteristic_radius(p, mp.alpha, mp.time);
}

// Default window radius: 1.5 * n(p_c - epsilon, t), the margin within which
// the origin cluster stays with probability -> 1.
inline std::int32_t default_window_radius(const ModelParams& p,
                                          double epsilon) {
    const double n = characteristic_radius(kPc - epsilon, p).value;
    const double m = std::ceil(1.5 * n);
    if (m < 1.0) return 1;
    if (m > double(Window::kMaxRadius))
        throw std::length_error(
            "default window radius exceeds the addressable maximum (32767); "
            "pass an explicit smaller window_radius");
    return std::int32_t(m);
}

// Open thresholds indexed by the doubled midpoint norm d = 2*|midpoint|.
// thresholds[d] = open_threshold(rho(d/2, t)); d=0 is unused padding.
class RadialThresholds {
  public:
    RadialThresholds() = default;
    RadialThresholds(const ModelParams& p, std::int32_t window_radius) {
        p.validate();
        const std::size_t dmax = 2 * std::size_t(window_radius) + 1;
        thr_.resize(dmax + 1, 0);
        for (std::size_t d = 1; d <= dmax; ++d)
            thr_[d] =
                rng::open_threshold(rho_at_norm(0.5 * double(d), p.alpha, p.time));
    }

    std::uint64_t at(std::int64_t doubled_norm) const noexcept {
        return thr_[std::size_t(doubled_norm)];
    }
    const std::uint64_t* data() const noexcept { return thr_.data(); }
    std::size_t size() const noexcept { return thr_.size(); }

  private:
    std::vector<std::uint64_t> thr_;
};

}  // namespace pperc
