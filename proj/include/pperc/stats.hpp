#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pperc::stats {

inline double mean(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("mean of empty range");
    double s = 0;
    for (const double x : v) s += x;
    return s / double(v.size());
}

inline double sample_variance(std::span<const double> v) {
    if (v.size() < 2) throw std::invalid_argument("variance needs >= 2 values");
    const double m = mean(v);
    double s = 0;
    for (const double x : v) s += (x - m) * (x - m);
    return s / double(v.size() - 1);
}

struct WilsonCI {
    double center = 0, halfwidth = 0, lo = 0, hi = 1;
};

inline WilsonCI wilson(std::uint64_t successes, std::uint64_t trials,
                       double z = 1.96) {
    if (trials == 0) throw std::invalid_argument("wilson: no trials");
    const double n = double(trials);
    const double ph = double(successes) / n;
    const double z2 = z * z;
    WilsonCI w;
    w.center = (ph + z2 / (2 * n)) / (1 + z2 / n);
    w.halfwidth =
        z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    w.lo = std::max(0.0, w.center - w.halfwidth);
    w.hi = std::min(1.0, w.center + w.halfwidth);
    return w;
}

struct LineFit {
    double slope = 0, intercept = 0, se_slope = 0, r2 = 0;
    int n = 0;
};

inline LineFit line_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("line_fit needs >= 2 paired points");
    const int n = int(x.size());
    const double mx = mean(x), my = mean(y);
    double sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) throw std::invalid_argument("line_fit: degenerate x");
    LineFit f;
    f.n = n;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ssr = 0;
    for (int i = 0; i < n; ++i) {
        const double e = y[i] - (f.intercept + f.slope * x[i]);
        ssr += e * e;
    }
    f.r2 = (syy == 0) ? 1.0 : 1.0 - ssr / syy;
    f.se_slope = (n > 2) ? std::sqrt(ssr / double(n - 2) / sxx) : 0.0;
    return f;
}

// Pool-adjacent-violators: project v onto nondecreasing sequences
// (least squares, optional weights).
inline void isotonic_increasing(std::vector<double>& v,
                                const std::vector<double>* weights = nullptr) {
    const std::size_t n = v.size();
    if (n < 2) return;
    std::vector<double> val, wt;
    std::vector<std::size_t> len;
    val.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double cv = v[i];
        double cw = weights ? (*weights)[i] : 1.0;
        std::size_t cl = 1;
        while (!val.empty() && val.back() > cv) {
            cv = (val.back() * wt.back() + cv * cw) / (wt.back() + cw);
            cw += wt.back();
            cl += len.back();
            val.pop_back();
            wt.pop_back();
            len.pop_back();
        }
        val.push_back(cv);
        wt.push_back(cw);
        len.push_back(cl);
    }
    std::size_t k = 0;
    for (std::size_t b = 0; b < val.size(); ++b)
        for (std::size_t i = 0; i < len[b]; ++i) v[k++] = val[b];
}

// Wilson-Hilferty approximation to the chi-square quantile; ample for the
// 1%-level goodness-of-fit screens used here.
inline double chi2_quantile(double df, double prob) {
    if (df <= 0) throw std::invalid_argument("chi2_quantile: df > 0");
    // inverse normal via Acklam-style rational approximation on the tails
    auto norm_quantile = [](double p) {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("norm quantile domain");
        static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
        static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
        static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
        static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
        const double plow = 0.02425, phigh = 1 - plow;
        double q, r;
        if (p < plow) {
            q = std::sqrt(-2 * std::log(p));
            return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
                    c[5]) /
                   ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
        }
        if (p > phigh) {
            q = std::sqrt(-2 * std::log(1 - p));
            return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
                     c[5]) /
                   ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
        }
        q = p - 0.5;
        r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
                a[5]) *
               q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    };
    const double z = norm_quantile(prob);
    const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
    return df * t * t * t;
}

// Two-sample Kolmogorov-Smirnov statistic (inputs need not be sorted).
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double dmax = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        const double fa = double(i) / double(a.size());
        const double fb = double(j) / double(b.size());
        dmax = std::max(dmax, std::abs(fa - fb));
    }
    return dmax;
}

// Critical value for the two-sample KS test; c(0.01) = 1.628.
inline double ks_critical(std::size_t n, std::size_t m, double c_alpha = 1.628) {
    return c_alpha * std::sqrt(double(n + m) / (double(n) * double(m)));
}

}  // namespace pperc::stats
