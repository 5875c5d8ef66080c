#pragma once

#include "fourmap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace fourmap {

namespace detail {

/// In-place iterative radix-2 FFT (unnormalized); sign = -1 forward, +1 inverse.
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * M_PI / double(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

/// Centered DFT along one contiguous run: input/output indexed by
/// a, k in [-N/2, N/2): out[k] = sum_a in[a] e^{sign i 2 pi a k / N}.
/// Implemented as rotate-by-N/2, FFT, rotate-by-N/2.
inline void centered_fft(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    std::rotate(a.begin(), a.begin() + n / 2, a.end());
    fft_pow2(a, sign);
    std::rotate(a.begin(), a.begin() + n / 2, a.end());
}

inline void transform_axes(GridFunction& g, int sign) {
    const int N = g.N;
    std::vector<cplx> line(std::size_t(N));
    if (g.n == 1) {
        centered_fft(g.values, sign);
        return;
    }
    for (int i = 0; i < N; ++i) {  // rows
        for (int j = 0; j < N; ++j) line[j] = g.at(i, j);
        centered_fft(line, sign);
        for (int j = 0; j < N; ++j) g.at(i, j) = line[j];
    }
    for (int j = 0; j < N; ++j) {  // columns
        for (int i = 0; i < N; ++i) line[i] = g.at(i, j);
        centered_fft(line, sign);
        for (int i = 0; i < N; ++i) g.at(i, j) = line[i];
    }
}

} // namespace detail

/// Discrete realization of (F f)(xi) = (2 pi)^{-n/2} integral e^{-i x.xi} f(x) dx:
/// rectangle-rule quadrature on the grid, output sampled on the dual grid
/// xi_k = pi k / L, k in [-N/2, N/2)^n.
inline GridFunction forward_transform(const GridFunction& f) {
    GridFunction out = f;
    detail::transform_axes(out, -1);
    const double scale = std::pow(f.spacing() / std::sqrt(2.0 * M_PI), f.n);
    for (auto& v : out.values) v *= scale;
    out.L = f.dual_half_width();
    return out;
}

/// Inverse of forward_transform; composition is the identity to rounding.
inline GridFunction inverse_transform(const GridFunction& F) {
    GridFunction out = F;
    detail::transform_axes(out, +1);
    const double scale = std::pow(F.spacing() / std::sqrt(2.0 * M_PI), F.n);
    for (auto& v : out.values) v *= scale;
    out.L = F.dual_half_width();
    return out;
}

} // namespace fourmap
