#pragma once

#include "fourmap/fft.hpp"
#include "fourmap/grid.hpp"
#include "fourmap/resolution.hpp"
#include "fourmap/space.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace fourmap {

/// Riemann-sum L_p norm on the grid; sup norm for p = inf.
inline double lp_norm(const GridFunction& f, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(p > 0.0)) throw std::domain_error("lp_norm requires p > 0");
    double acc = 0.0;
    for (const cplx& v : f.values) acc += std::pow(std::abs(v), p);
    return std::pow(acc * f.cell_measure(), 1.0 / p);
}

/// Lorentz norm via the decreasing rearrangement of the samples: each sample
/// occupies one cell of measure mu, and the rearrangement integral is an
/// exact finite sum over the resulting step function.
inline double lorentz_norm(const GridFunction& f, double p, double r) {
    if (!(p > 0.0) || std::isinf(p)) throw std::domain_error("lorentz_norm requires 0 < p < inf");
    if (!(r > 0.0)) throw std::domain_error("lorentz_norm requires r > 0");
    std::vector<double> mags(f.values.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f.values[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    const double mu = f.cell_measure();
    if (std::isinf(r)) {
        double m = 0.0;
        for (std::size_t i = 0; i < mags.size(); ++i)
            m = std::max(m, std::pow(double(i + 1) * mu, 1.0 / p) * mags[i]);
        return m;
    }
    // integral of (t^{1/p} f*(t))^r dt/t over each step [i mu, (i+1) mu)
    double acc = 0.0;
    double prev = 0.0;  // (i mu)^{r/p}
    const double e = r / p;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (mags[i] == 0.0) break;
        double cur = std::pow(double(i + 1) * mu, e);
        acc += std::pow(mags[i], r) * (cur - prev) * (p / r);
        prev = cur;
    }
    return std::pow(acc, 1.0 / r);
}

/// Exact-weight Sobolev norm || w_sigma f^ | L_2 || by quadrature on the
/// dual grid.
inline double sobolev_norm(const GridFunction& f, double sigma) {
    GridFunction fh = forward_transform(f);
    double acc = 0.0;
    const int N = fh.N;
    if (fh.n == 1) {
        for (int i = 0; i < N; ++i) {
            double xi = fh.coord(i);
            double w = weight_w(sigma, xi * xi);
            acc += w * w * std::norm(fh.at(i));
        }
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                double a = fh.coord(i), b = fh.coord(j);
                double w = weight_w(sigma, a * a + b * b);
                acc += w * w * std::norm(fh.at(i, j));
            }
    }
    return std::sqrt(acc * fh.cell_measure());
}

/// || w_alpha f | L_2 || (weighted L_2 in physical space).
inline double weighted_l2_norm(const GridFunction& f, double alpha) {
    double acc = 0.0;
    const int N = f.N;
    if (f.n == 1) {
        for (int i = 0; i < N; ++i) {
            double x = f.coord(i);
            double w = weight_w(alpha, x * x);
            acc += w * w * std::norm(f.at(i));
        }
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                double a = f.coord(i), b = f.coord(j);
                double w = weight_w(alpha, a * a + b * b);
                acc += w * w * std::norm(f.at(i, j));
            }
    }
    return std::sqrt(acc * f.cell_measure());
}

struct BesovNormResult {
    double total = 0.0;
    std::vector<std::pair<int, double>> per_level;  // (j, level L_p norm)
    int truncation_level = 0;
    double out_of_band_fraction = 0.0;  // spectral L_2 mass beyond |xi| > 2^J
};

/// Largest dyadic level whose block support (3/2) 2^J stays below Nyquist.
inline int besov_admissible_level(const GridFunction& f) {
    double ny = f.nyquist();
    int J = int(std::floor(std::log2(ny / 1.5)));
    return J;
}

/// FFT-based Littlewood-Paley norm: per-level L_p norms of the dyadic
/// blocks (phi_j f^)^v, aggregated in l_q with weights 2^{js}; optional
/// polynomial weight w_alpha applied pointwise in physical space.
inline BesovNormResult besov_norm(const GridFunction& f, double s, double p, double q,
                                  std::optional<double> alpha = {}) {
    const int J = besov_admissible_level(f);
    if (J < 0)
        throw std::domain_error(
            "besov_norm: Nyquist " + std::to_string(f.nyquist()) +
            " is below the first dyadic block (3/2); no admissible truncation level");

    GridFunction fh = forward_transform(f);
    ResolutionOfUnity res = make_resolution(J);

    BesovNormResult out;
    out.truncation_level = J;

    // spectral mass beyond the telescoped plateau |xi| <= 2^J
    {
        double inside = 0.0, total = 0.0;
        const double lim = std::ldexp(1.0, J);
        const int N = fh.N;
        for (int i = 0; i < N; ++i) {
            if (fh.n == 1) {
                double e = std::norm(fh.at(i));
                total += e;
                if (std::abs(fh.coord(i)) <= lim) inside += e;
            } else {
                for (int j2 = 0; j2 < N; ++j2) {
                    double e = std::norm(fh.at(i, j2));
                    total += e;
                    if (std::hypot(fh.coord(i), fh.coord(j2)) <= lim) inside += e;
                }
            }
        }
        out.out_of_band_fraction = total > 0.0 ? std::max(0.0, 1.0 - inside / total) : 0.0;
    }

    for (int j = 0; j <= J; ++j) {
        GridFunction cut = sample_phi(res, j, fh);
        for (std::size_t i = 0; i < cut.values.size(); ++i) cut.values[i] *= fh.values[i];
        GridFunction block = inverse_transform(cut);
        double lev;
        if (alpha) {
            GridFunction wb = block;
            const int N = wb.N;
            if (wb.n == 1) {
                for (int i = 0; i < N; ++i) {
                    double x = wb.coord(i);
                    wb.at(i) *= weight_w(*alpha, x * x);
                }
            } else {
                for (int i = 0; i < N; ++i)
                    for (int k = 0; k < N; ++k) {
                        double a = wb.coord(i), b = wb.coord(k);
                        wb.at(i, k) *= weight_w(*alpha, a * a + b * b);
                    }
            }
            lev = lp_norm(wb, p);
        } else {
            lev = lp_norm(block, p);
        }
        out.per_level.emplace_back(j, lev);
    }

    if (std::isinf(q)) {
        double m = 0.0;
        for (auto& [j, v] : out.per_level) m = std::max(m, std::pow(2.0, s * j) * v);
        out.total = m;
    } else {
        if (!(q > 0.0)) throw std::domain_error("besov_norm requires q > 0");
        double acc = 0.0;
        for (auto& [j, v] : out.per_level) acc += std::pow(std::pow(2.0, s * j) * v, q);
        out.total = std::pow(acc, 1.0 / q);
    }
    return out;
}

/// Norm of f in the given space; throws unsupported_parameters for families
/// this engine does not compute (the F-scale).
inline double space_norm(const GridFunction& f, const SpaceSpec& spec) {
    if (spec.n != f.n) throw std::domain_error("space dimension does not match grid dimension");
    switch (spec.family) {
        case SpaceFamily::lp:
            return lp_norm(f, spec.p.to_double());
        case SpaceFamily::lorentz:
            return lorentz_norm(f, spec.p.to_double(), spec.r.to_double());
        case SpaceFamily::besov:
        case SpaceFamily::besov_diag:
        case SpaceFamily::holder: {
            SpaceSpec c = spec.normalized();
            return besov_norm(f, c.s.to_double(), c.p.to_double(), c.q.to_double()).total;
        }
        case SpaceFamily::sobolev:
            return sobolev_norm(f, spec.s.to_double());
        case SpaceFamily::weighted_besov:
            return besov_norm(f, spec.s.to_double(), spec.p.to_double(), spec.q.to_double(),
                              spec.alpha.to_double())
                .total;
        case SpaceFamily::weighted_l2:
            return weighted_l2_norm(f, spec.alpha.to_double());
        case SpaceFamily::sobolev_fractional:
            throw unsupported_parameters(
                "H^s_p norms on the F-scale are not computed numerically; classify them via the "
                "Besov envelope instead");
    }
    throw std::logic_error("unreachable");
}

struct EmbeddingProbe {
    double worst_ratio = 0.0;
    std::vector<double> ratios;
};

/// Worst observed ratio ||f|dst|| / ||f|src|| over a corpus; a bounded-ratio
/// monitor, not a proof.
inline EmbeddingProbe check_embedding_inequality(const std::vector<GridFunction>& corpus,
                                                 const SpaceSpec& src, const SpaceSpec& dst) {
    if (corpus.empty()) throw std::domain_error("check_embedding_inequality: empty corpus");
    EmbeddingProbe probe;
    for (const GridFunction& f : corpus) {
        double a = space_norm(f, src);
        double b = space_norm(f, dst);
        double r = a > 0.0 ? b / a : 0.0;
        probe.ratios.push_back(r);
        probe.worst_ratio = std::max(probe.worst_ratio, r);
    }
    return probe;
}

} // namespace fourmap
