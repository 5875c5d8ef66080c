#pragma once

#include "fourmap/rational.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourmap {

using cplx = std::complex<double>;

/// Complex samples on the uniform periodized grid over [-L, L)^n,
/// n in {1, 2}, N samples per axis (power of two). Row-major storage,
/// axis coordinate x_a = a * (2L/N) with a in [-N/2, N/2).
struct GridFunction {
    int n = 1;
    double L = 1.0;
    int N = 8;
    std::vector<cplx> values;

    GridFunction() = default;
    GridFunction(int n_, double L_, int N_) : n(n_), L(L_), N(N_) {
        check_geometry(n, L, N);
        values.assign(size(), cplx(0.0, 0.0));
    }

    static void check_geometry(int n, double L, int N) {
        if (n != 1 && n != 2) throw std::domain_error("grid dimension must be 1 or 2");
        if (!(L > 0.0)) throw std::domain_error("grid half-width L must be positive");
        if (N < 8 || (N & (N - 1)) != 0) throw std::domain_error("N must be a power of two, N >= 8");
    }

    std::size_t size() const { return n == 1 ? std::size_t(N) : std::size_t(N) * N; }
    double spacing() const { return 2.0 * L / N; }
    double cell_measure() const { return n == 1 ? spacing() : spacing() * spacing(); }
    /// Highest resolvable frequency pi*N/(2L) of the dual grid.
    double nyquist() const { return M_PI * N / (2.0 * L); }
    /// Half-width of the dual grid (the dual of the dual is the original grid).
    double dual_half_width() const { return nyquist(); }

    double coord(int a) const { return (a - N / 2) * spacing(); }

    cplx& at(int i) { return values[std::size_t(i)]; }
    cplx& at(int i, int j) { return values[std::size_t(i) * N + j]; }
    const cplx& at(int i) const { return values[std::size_t(i)]; }
    const cplx& at(int i, int j) const { return values[std::size_t(i) * N + j]; }

    bool same_geometry(const GridFunction& o) const {
        return n == o.n && N == o.N && L == o.L;
    }

    GridFunction map(const std::function<cplx(cplx)>& f) const {
        GridFunction out = *this;
        for (auto& v : out.values) v = f(v);
        return out;
    }

    friend GridFunction operator-(const GridFunction& a, const GridFunction& b) {
        if (!a.same_geometry(b)) throw std::domain_error("grid geometry mismatch");
        GridFunction out = a;
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
        return out;
    }
    friend GridFunction operator+(const GridFunction& a, const GridFunction& b) {
        if (!a.same_geometry(b)) throw std::domain_error("grid geometry mismatch");
        GridFunction out = a;
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
        return out;
    }
};

/// Sample a scalar function of the coordinates.
inline GridFunction sample(int n, double L, int N, const std::function<cplx(double, double)>& f) {
    GridFunction g(n, L, N);
    if (n == 1) {
        for (int i = 0; i < N; ++i) g.at(i) = f(g.coord(i), 0.0);
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) g.at(i, j) = f(g.coord(i), g.coord(j));
    }
    return g;
}

/// Polynomial weight w_alpha(x) = (1 + |x|^2)^{alpha/2}.
inline double weight_w(double alpha, double r2) { return std::pow(1.0 + r2, alpha / 2.0); }

// --- builtin generator families ---------------------------------------------

/// gaussian: exp(-|x|^2 / (2 sigma^2))
inline GridFunction make_gaussian(int n, double L, int N, double sigma = 1.0) {
    if (!(sigma > 0)) throw std::domain_error("gaussian sigma must be positive");
    return sample(n, L, N, [=](double x, double y) {
        return cplx(std::exp(-(x * x + y * y) / (2.0 * sigma * sigma)), 0.0);
    });
}

/// bump: radial shell exp(-(|x| - center)^2 / (2 width^2)); center 0 gives a
/// plain radial bump. Numerically compactly supported.
inline GridFunction make_bump(int n, double L, int N, double center, double width) {
    if (!(width > 0) || center < 0) throw std::domain_error("bump requires width > 0, center >= 0");
    return sample(n, L, N, [=](double x, double y) {
        double r = std::sqrt(x * x + y * y);
        double t = (r - center) / width;
        return cplx(std::exp(-0.5 * t * t), 0.0);
    });
}

/// modulated-bump: exp(-|x|^2/(2 width^2)) * e^{i k.x} (k along the first axis
/// unless ky given): spectrum concentrated near |xi| = |k|.
inline GridFunction make_modulated_bump(int n, double L, int N, double width, double kx,
                                        double ky = 0.0) {
    if (!(width > 0)) throw std::domain_error("modulated-bump requires width > 0");
    return sample(n, L, N, [=](double x, double y) {
        double env = std::exp(-(x * x + y * y) / (2.0 * width * width));
        double ph = kx * x + ky * y;
        return cplx(env * std::cos(ph), env * std::sin(ph));
    });
}

/// Builtin generators addressable by name + parameter map (CLI surface).
inline GridFunction make_builtin(const std::string& name, int n, double L, int N,
                                 const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key, double dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    if (name == "gaussian") return make_gaussian(n, L, N, get("sigma", 1.0));
    if (name == "bump") return make_bump(n, L, N, get("center", 0.87), get("width", 1.0 / 80.0));
    if (name == "modulated-bump")
        return make_modulated_bump(n, L, N, get("width", 1.0), get("kx", 1.0), get("ky", 0.0));
    throw std::invalid_argument("unknown builtin generator '" + name + "'");
}

// --- plain-text file format: header "n N L", then re im rows ----------------

inline void write_grid(const GridFunction& g, std::ostream& os) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", g.n, g.N, g.L);
    os << buf;
    for (const cplx& v : g.values) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.real(), v.imag());
        os << buf;
    }
}

inline void write_grid(const GridFunction& g, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_grid(g, os);
}

inline GridFunction read_grid(std::istream& is) {
    int n = 0, N = 0;
    double L = 0;
    if (!(is >> n >> N >> L)) throw std::runtime_error("grid file: malformed header (want 'n N L')");
    GridFunction g(n, L, N);
    for (std::size_t i = 0; i < g.size(); ++i) {
        double re, im;
        if (!(is >> re >> im)) throw std::runtime_error("grid file: truncated value list");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::runtime_error("grid file: non-finite sample");
        g.values[i] = cplx(re, im);
    }
    return g;
}

inline GridFunction read_grid(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    return read_grid(is);
}

} // namespace fourmap
