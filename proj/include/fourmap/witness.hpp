#pragma once

#include "fourmap/fft.hpp"
#include "fourmap/norms.hpp"
#include "fourmap/rational.hpp"
#include "fourmap/resolution.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fourmap {

enum class WitnessKind { dilated, modulated };

/// Explicit family certifying non-compactness on a limiting line: bounded in
/// the source norm while the transformed members stay uniformly separated in
/// the target norm.
struct WitnessFamily {
    WitnessKind kind = WitnessKind::dilated;
    GridFunction base;                                   // the profile psi
    std::vector<std::pair<long, GridFunction>> members;  // (index, member)
    Rational p{2};                                       // L_p normalization scale
    std::vector<double> alignment_defect;                // dilated: energy outside block j
};

namespace detail {

/// Radius of the numerically effective support: largest |x| whose sample
/// exceeds tol * max|psi|.
inline double support_radius(const GridFunction& psi, double tol = 1e-12) {
    double m = 0.0;
    for (const cplx& v : psi.values) m = std::max(m, std::abs(v));
    if (m == 0.0) throw std::domain_error("witness profile is identically zero");
    double r = 0.0;
    const int N = psi.N;
    if (psi.n == 1) {
        for (int i = 0; i < N; ++i)
            if (std::abs(psi.at(i)) > tol * m) r = std::max(r, std::abs(psi.coord(i)));
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (std::abs(psi.at(i, j)) > tol * m)
                    r = std::max(r, std::hypot(psi.coord(i), psi.coord(j)));
    }
    return r;
}

/// psi(2^{-j} x) on the original grid via spectral refinement: the dual-grid
/// spectrum is embedded centered into a 2^j N array and inverted, which
/// evaluates the Nyquist interpolant of psi at the needed finer points.
inline GridFunction dyadic_dilate(const GridFunction& psi, int j) {
    if (j == 0) return psi;
    const int N = psi.N;
    GridFunction spec = forward_transform(psi);
    const std::size_t M = std::size_t(N) << j;
    std::vector<cplx> big(M, cplx(0.0, 0.0));
    const std::size_t off = M / 2 - std::size_t(N) / 2;
    for (int k = 0; k < N; ++k) big[off + k] = spec.values[std::size_t(k)];
    detail::centered_fft(big, +1);
    // inverse quadrature weight of the embedded spectrum
    const double scale = spec.spacing() / std::sqrt(2.0 * M_PI);
    GridFunction out = psi;
    const std::size_t mid = M / 2;
    for (int i = 0; i < N; ++i) out.at(i) = big[mid + (i - N / 2)] * scale;
    return out;
}

} // namespace detail

/// Members f_j(x) = 2^{-jn/p} psi(2^{-j} x), j in [j_lo, j_hi]. The profile
/// must be supported in an annulus that keeps each member inside the plateau
/// of dyadic block j; the alignment is measured, not assumed, and stored as
/// the fraction of member energy outside {phi_j = 1}.
inline WitnessFamily dilated_family(const GridFunction& psi, const Rational& p, int j_lo, int j_hi) {
    if (psi.n != 1)
        throw unsupported_parameters("dilated_family is implemented for n = 1 grids");
    if (j_lo < 0 || j_hi < j_lo) throw std::domain_error("dilated_family requires 0 <= j_lo <= j_hi");
    if (!(p.to_double() > 0)) throw std::domain_error("dilated_family requires p > 0");

    const double R = detail::support_radius(psi);
    const int j_max_adm = int(std::floor(std::log2(psi.L / R)));
    if (j_hi > j_max_adm)
        throw std::domain_error("dilated_family: support overflows the grid at j = " +
                                std::to_string(j_hi) + "; max admissible j is " +
                                std::to_string(j_max_adm));

    ResolutionOfUnity res = make_resolution(j_hi);
    const double np = double(psi.n) / p.to_double();

    WitnessFamily fam;
    fam.kind = WitnessKind::dilated;
    fam.base = psi;
    fam.p = p;
    for (int j = j_lo; j <= j_hi; ++j) {
        GridFunction mj = detail::dyadic_dilate(psi, j);
        const double norm_factor = std::pow(2.0, -double(j) * np);
        for (auto& v : mj.values) v *= norm_factor;
        // energy fraction outside the plateau {phi_j = 1}
        double in = 0.0, tot = 0.0;
        for (int i = 0; i < mj.N; ++i) {
            double e = std::norm(mj.at(i));
            tot += e;
            if (res.phi(j, std::abs(mj.coord(i))) >= 1.0) in += e;
        }
        fam.alignment_defect.push_back(tot > 0 ? std::max(0.0, 1.0 - in / tot) : 1.0);
        fam.members.emplace_back(j, std::move(mj));
    }
    return fam;
}

/// Members f_m(x) = e^{i m.x} psi^v(x) for lattice points m; the forward
/// transform of member m is the translate psi(. - m).
inline WitnessFamily modulated_family(const GridFunction& psi,
                                      const std::vector<std::vector<long>>& m_list) {
    if (m_list.empty()) throw std::domain_error("modulated_family requires at least one lattice point");
    for (const auto& m : m_list)
        if (int(m.size()) != psi.n)
            throw std::domain_error("modulated_family lattice points must match the grid dimension");

    const double R = detail::support_radius(psi);
    double m_max = 0.0;
    for (const auto& m : m_list) {
        double norm2 = 0.0;
        for (long c : m) norm2 += double(c) * double(c);
        m_max = std::max(m_max, std::sqrt(norm2));
    }
    GridFunction base_inv = inverse_transform(psi);
    if (R + m_max > base_inv.nyquist())
        throw std::domain_error("modulated_family: shifted spectrum exceeds Nyquist (" +
                                std::to_string(R + m_max) + " > " +
                                std::to_string(base_inv.nyquist()) + ")");

    WitnessFamily fam;
    fam.kind = WitnessKind::modulated;
    fam.base = psi;
    fam.p = Rational(2);
    long idx = 0;
    for (const auto& m : m_list) {
        GridFunction fm = base_inv;
        const int N = fm.N;
        if (fm.n == 1) {
            for (int i = 0; i < N; ++i) {
                double ph = double(m[0]) * fm.coord(i);
                fm.at(i) *= cplx(std::cos(ph), std::sin(ph));
            }
        } else {
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < N; ++k) {
                    double ph = double(m[0]) * fm.coord(i) + double(m[1]) * fm.coord(k);
                    fm.at(i, k) *= cplx(std::cos(ph), std::sin(ph));
                }
        }
        fam.members.emplace_back(idx++, std::move(fm));
    }
    return fam;
}

struct SeparationReport {
    std::vector<std::vector<double>> distance;  // pairwise, transformed members
    std::vector<double> member_norm;            // transformed-member norms
    double min_off_diagonal = 0.0;
    double median_member_norm = 0.0;
};

/// Pairwise target-space distances of the transformed members. A uniform
/// positive lower bound on the off-diagonal rules out any finite eps-net
/// with eps below half that bound.
inline SeparationReport separation_matrix(const WitnessFamily& fam, const SpaceSpec& space) {
    if (fam.members.size() < 3)
        throw std::domain_error("separation_matrix requires at least 3 members");
    std::vector<GridFunction> transformed;
    transformed.reserve(fam.members.size());
    for (const auto& [idx, m] : fam.members) transformed.push_back(forward_transform(m));

    const std::size_t M = transformed.size();
    SeparationReport rep;
    rep.distance.assign(M, std::vector<double>(M, 0.0));
    for (std::size_t i = 0; i < M; ++i) rep.member_norm.push_back(space_norm(transformed[i], space));

    rep.min_off_diagonal = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t l = i + 1; l < M; ++l) {
            double d = space_norm(transformed[i] - transformed[l], space);
            rep.distance[i][l] = rep.distance[l][i] = d;
            rep.min_off_diagonal = std::min(rep.min_off_diagonal, d);
        }

    std::vector<double> sorted = rep.member_norm;
    std::sort(sorted.begin(), sorted.end());
    rep.median_member_norm = sorted[sorted.size() / 2];
    return rep;
}

} // namespace fourmap
