#pragma once

#include "fourmap/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fourmap {

/// Smooth transition step: exactly 1 for t <= 1, exactly 0 for t >= 3/2,
/// monotone C^infinity glue (built from e^{-1/t}) in between. This is the
/// canonical profile, frozen so per-level values are reproducible.
inline double transition_profile(double t) {
    if (t <= 1.0) return 1.0;
    if (t >= 1.5) return 0.0;
    double u = (t - 1.0) * 2.0;  // in (0, 1)
    double ga = std::exp(-1.0 / (1.0 - u));
    double gb = std::exp(-1.0 / u);
    return ga / (ga + gb);
}

/// Dyadic resolution of unity {phi_j}: phi_0(x) = theta(|x|) equals 1 for
/// |x| <= 1 and 0 for |x| >= 3/2; phi_j(x) = phi_0(2^{-j} x) - phi_0(2^{-j+1} x)
/// for j >= 1. Partial sums telescope to phi_0(2^{-J} x).
struct ResolutionOfUnity {
    int J_max = 0;

    double phi0(double r) const { return transition_profile(r); }

    double phi(int j, double r) const {
        if (j < 0 || j > J_max) throw std::domain_error("phi level out of range");
        if (j == 0) return phi0(r);
        return phi0(std::ldexp(r, -j)) - phi0(std::ldexp(r, -j + 1));
    }

    /// Telescoped partial sum over j = 0..J.
    double partial_sum(int J, double r) const { return phi0(std::ldexp(r, -J)); }
};

inline ResolutionOfUnity make_resolution(int J_max) {
    if (J_max < 0) throw std::domain_error("make_resolution requires J_max >= 0");
    return ResolutionOfUnity{J_max};
}

/// phi_j(|xi|) sampled on the dual grid of g's transform side, i.e. on g's
/// own coordinates (callers pass the spectral-side grid).
inline GridFunction sample_phi(const ResolutionOfUnity& res, int j, const GridFunction& spectral) {
    GridFunction out = spectral;
    const int N = spectral.N;
    if (spectral.n == 1) {
        for (int i = 0; i < N; ++i)
            out.at(i) = cplx(res.phi(j, std::abs(spectral.coord(i))), 0.0);
    } else {
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                double x = spectral.coord(i), y = spectral.coord(k);
                out.at(i, k) = cplx(res.phi(j, std::hypot(x, y)), 0.0);
            }
    }
    return out;
}

} // namespace fourmap
