#pragma once

#include "fourmap/grid.hpp"
#include "fourmap/rate.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <vector>

namespace fourmap {

/// Discretization of F: H^{s1} -> H^{s2} conjugated to an L_2 -> L_2 map:
/// u = w_{s1} f^ carries the H^{s1} norm, and the H^{s2} norm of Ff is
/// || w_{s2} f ||_2, so A = diag(w_{s2}(x)) . U_dft . diag(w_{s1}(xi))^{-1}
/// with the unitary discrete Fourier kernel between the grid and its dual.
struct KernelMatrix {
    Eigen::MatrixXcd entries;
    double s1 = 0.0, s2 = 0.0;
    int n = 1;
    double L = 0.0;
    int N = 0;
};

inline KernelMatrix build_fourier_kernel(double s1, double s2, int n, double L, int N) {
    if (n != 1)
        throw unsupported_parameters("build_fourier_kernel supports n = 1 (matrix size N^n)");
    if (!(s1 > 0.0) || !(s2 < 0.0))
        throw unsupported_parameters("build_fourier_kernel requires s1 > 0 > s2 (got s1 = " +
                                     std::to_string(s1) + ", s2 = " + std::to_string(s2) + ")");
    GridFunction::check_geometry(1, L, N);

    const double dx = 2.0 * L / N;
    const double dxi = M_PI / L;
    // (2 pi)^{-1/2} e^{-i x xi} * sqrt(dx dxi) has modulus 1/sqrt(N): unitary
    const double amp = std::sqrt(dx * dxi / (2.0 * M_PI));

    KernelMatrix K;
    K.s1 = s1; K.s2 = s2; K.n = n; K.L = L; K.N = N;
    K.entries.resize(N, N);
    std::vector<double> w2(N), w1inv(N);
    for (int a = 0; a < N; ++a) {
        double x = (a - N / 2) * dx;
        w2[a] = weight_w(s2, x * x);
    }
    for (int b = 0; b < N; ++b) {
        double xi = (b - N / 2) * dxi;
        w1inv[b] = 1.0 / weight_w(s1, xi * xi);
    }
    for (int a = 0; a < N; ++a) {
        double x = (a - N / 2) * dx;
        for (int b = 0; b < N; ++b) {
            double xi = (b - N / 2) * dxi;
            double ph = -x * xi;
            K.entries(a, b) = w2[a] * amp * cplx(std::cos(ph), std::sin(ph)) * w1inv[b];
        }
    }
    return K;
}

/// Singular values, descending.
inline std::vector<double> singular_values(const KernelMatrix& K) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(K.entries);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

/// Power-law fit of a positive decreasing sequence over a k-window.
struct DecayFit {
    double power_exponent = 0.0;
    double r_squared = 0.0;
    int k_lo = 1, k_hi = 1;
    int sequence_length = 0;
};

inline DecayFit singular_decay(const std::vector<double>& sigma, int k_lo, int k_hi) {
    const int len = int(sigma.size());
    if (k_lo < 1 || k_hi > len || k_lo >= k_hi)
        throw std::domain_error("singular_decay: window must satisfy 1 <= k_lo < k_hi <= length");
    if (k_hi - k_lo + 1 < 4)
        throw std::domain_error("singular_decay: window must contain at least 4 points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int m = k_hi - k_lo + 1;
    for (int k = k_lo; k <= k_hi; ++k) {
        if (!(sigma[k - 1] > 0.0))
            throw std::domain_error("singular_decay: sequence must be positive on the window");
        double x = std::log(double(k)), y = std::log(sigma[k - 1]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / m;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / m;
    for (int k = k_lo; k <= k_hi; ++k) {
        double x = std::log(double(k)), y = std::log(sigma[k - 1]);
        double e = y - (slope * x + intercept);
        ss_res += e * e;
        ss_tot += (y - ybar) * (y - ybar);
    }
    DecayFit fit;
    fit.power_exponent = slope;
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.k_lo = k_lo; fit.k_hi = k_hi;
    fit.sequence_length = len;
    return fit;
}

enum class RateCheckOutcome { passed, failed, reported_only };

struct RateCheckReport {
    RateCheckOutcome outcome = RateCheckOutcome::reported_only;
    double measured = 0.0;
    double predicted = 0.0;
    double tolerance = 0.0;
    double r_squared = 0.0;
    std::string note;
};

/// Pass iff the fitted exponent matches a pure-power prediction within tol
/// and the fit quality is r^2 >= 0.98. Log-corrected predictions are
/// reported, not judged: they are indistinguishable from a drifted power at
/// this scale.
inline RateCheckReport rate_check(const DecayFit& fit, const RateLaw& predicted, double tol) {
    RateCheckReport rep;
    rep.measured = fit.power_exponent;
    rep.predicted = predicted.power_exponent.to_double();
    rep.tolerance = tol;
    rep.r_squared = fit.r_squared;
    if (predicted.form != RateForm::pure_power) {
        rep.outcome = RateCheckOutcome::reported_only;
        rep.note = "non-power predicted form " + std::string(form_name(predicted.form)) +
                   "; local slope reported only";
        return rep;
    }
    const bool ok = std::abs(fit.power_exponent - rep.predicted) <= tol && fit.r_squared >= 0.98;
    rep.outcome = ok ? RateCheckOutcome::passed : RateCheckOutcome::failed;
    return rep;
}

} // namespace fourmap
