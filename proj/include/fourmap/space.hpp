#pragma once

#include "fourmap/rational.hpp"

#include <string>

namespace fourmap {

/// Critical smoothness line d^n_p = 2n(1/p - 1/2); 1/inf = 0.
inline Rational d_np(const Index& p, int n) {
    if (!p.is_inf() && !(p.value() > Rational(0)))
        throw std::domain_error("d_np requires p > 0 (p = " + p.str() + ")");
    if (n < 1) throw std::domain_error("d_np requires n >= 1");
    return Rational(2 * n) * (p.recip() - Rational(1, 2));
}

/// Upper limiting line tau^{n+}_p = max(0, d^n_p).
inline Rational tau_plus(const Index& p, int n) {
    return Rational::max(Rational(0), d_np(p, n));
}

/// Lower limiting line tau^{n-}_p = min(0, d^n_p).
inline Rational tau_minus(const Index& p, int n) {
    return Rational::min(Rational(0), d_np(p, n));
}

enum class SpaceFamily {
    lp,                  // L_p
    lorentz,             // L_{p,r}
    besov,               // B^s_{p,q}
    besov_diag,          // B^s_p = B^s_{p,p}
    sobolev,             // H^s = B^s_{2,2}
    holder,              // C^s = B^s_{inf,inf}
    sobolev_fractional,  // H^s_p = F^s_{p,2}, handled symbolically only
    weighted_besov,      // B^s_{p,q}(w_alpha)
    weighted_l2,         // L_2(w_alpha) = B^0_{2,2}(w_alpha)
};

inline const char* family_name(SpaceFamily f) {
    switch (f) {
        case SpaceFamily::lp: return "Lp";
        case SpaceFamily::lorentz: return "Lorentz";
        case SpaceFamily::besov: return "Besov";
        case SpaceFamily::besov_diag: return "BesovDiag";
        case SpaceFamily::sobolev: return "Sobolev";
        case SpaceFamily::holder: return "Holder";
        case SpaceFamily::sobolev_fractional: return "SobolevFractional";
        case SpaceFamily::weighted_besov: return "WeightedBesov";
        case SpaceFamily::weighted_l2: return "WeightedL2";
    }
    return "?";
}

/// Symbolic descriptor of a function space. Aliases normalize onto the
/// Besov scale: H^s = B^s_{2,2}, C^s = B^s_{inf,inf}, B^s_p = B^s_{p,p},
/// L_p = L_{p,p}.
struct SpaceSpec {
    SpaceFamily family = SpaceFamily::besov;
    Rational s{0};       // smoothness
    Index p{2};          // integrability
    Index q{2};          // fine index (Besov scale)
    Index r{2};          // Lorentz second index
    Rational alpha{0};   // weight exponent (weighted families)
    int n = 1;           // dimension

    static SpaceSpec Lp(Index p, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::lp; sp.p = p; sp.r = p; sp.n = n; return sp;
    }
    static SpaceSpec Lorentz(Index p, Index r, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::lorentz; sp.p = p; sp.r = r; sp.n = n; return sp;
    }
    static SpaceSpec Besov(Rational s, Index p, Index q, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::besov; sp.s = s; sp.p = p; sp.q = q; sp.n = n; return sp;
    }
    static SpaceSpec BesovDiag(Rational s, Index p, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::besov_diag; sp.s = s; sp.p = p; sp.q = p; sp.n = n; return sp;
    }
    static SpaceSpec Sobolev(Rational s, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::sobolev; sp.s = s; sp.p = Index(2); sp.q = Index(2); sp.n = n; return sp;
    }
    static SpaceSpec Holder(Rational s, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::holder; sp.s = s;
        sp.p = Index::infinity(); sp.q = Index::infinity(); sp.n = n; return sp;
    }
    static SpaceSpec SobolevFractional(Rational s, Index p, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::sobolev_fractional; sp.s = s; sp.p = p; sp.q = Index(2); sp.n = n; return sp;
    }
    static SpaceSpec WeightedBesov(Rational s, Index p, Index q, Rational alpha, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::weighted_besov; sp.s = s; sp.p = p; sp.q = q;
        sp.alpha = alpha; sp.n = n; return sp;
    }
    static SpaceSpec WeightedL2(Rational alpha, int n = 1) {
        SpaceSpec sp; sp.family = SpaceFamily::weighted_l2; sp.p = Index(2); sp.q = Index(2);
        sp.alpha = alpha; sp.n = n; return sp;
    }

    /// Canonical form on the (possibly weighted) Besov/Lorentz scale.
    SpaceSpec normalized() const {
        switch (family) {
            case SpaceFamily::besov_diag: return Besov(s, p, p, n);
            case SpaceFamily::sobolev: return Besov(s, Index(2), Index(2), n);
            case SpaceFamily::holder: return Besov(s, Index::infinity(), Index::infinity(), n);
            case SpaceFamily::lp: return Lorentz(p, p, n);
            case SpaceFamily::weighted_l2: return WeightedBesov(Rational(0), Index(2), Index(2), alpha, n);
            default: return *this;
        }
    }

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
        SpaceSpec x = a.normalized(), y = b.normalized();
        if (x.family != y.family || x.n != y.n) return false;
        switch (x.family) {
            case SpaceFamily::lorentz: return x.p == y.p && x.r == y.r;
            case SpaceFamily::besov: return x.s == y.s && x.p == y.p && x.q == y.q;
            case SpaceFamily::weighted_besov:
                return x.s == y.s && x.p == y.p && x.q == y.q && x.alpha == y.alpha;
            case SpaceFamily::sobolev_fractional: return x.s == y.s && x.p == y.p;
            default: return x.s == y.s && x.p == y.p && x.q == y.q && x.alpha == y.alpha;
        }
    }
    friend bool operator!=(const SpaceSpec& a, const SpaceSpec& b) { return !(a == b); }

    std::string str() const {
        std::string base = family_name(family);
        switch (family) {
            case SpaceFamily::lp: return "L_" + p.str();
            case SpaceFamily::lorentz: return "L_{" + p.str() + "," + r.str() + "}";
            case SpaceFamily::besov: return "B^{" + s.str() + "}_{" + p.str() + "," + q.str() + "}";
            case SpaceFamily::besov_diag: return "B^{" + s.str() + "}_" + p.str();
            case SpaceFamily::sobolev: return "H^{" + s.str() + "}";
            case SpaceFamily::holder: return "C^{" + s.str() + "}";
            case SpaceFamily::sobolev_fractional: return "H^{" + s.str() + "}_" + p.str();
            case SpaceFamily::weighted_besov:
                return "B^{" + s.str() + "}_{" + p.str() + "," + q.str() + "}(w_" + alpha.str() + ")";
            case SpaceFamily::weighted_l2: return "L_2(w_" + alpha.str() + ")";
        }
        return base;
    }
};

/// Dual space on the diagonal Besov / Lp / Sobolev scale, 1 < p < inf:
/// B^s_p -> B^{-s}_{p'}, L_p -> L_{p'}, H^s -> H^{-s}. Involutive.
inline SpaceSpec dual_space(const SpaceSpec& x) {
    auto check_p = [&](const Index& p) {
        if (p.is_inf() || !(p.value() > Rational(1)))
            throw unsupported_parameters("dual_space requires 1 < p < inf (p = " + p.str() + ")");
    };
    switch (x.family) {
        case SpaceFamily::besov_diag: {
            check_p(x.p);
            return SpaceSpec::BesovDiag(-x.s, x.p.conjugate(), x.n);
        }
        case SpaceFamily::lp: {
            check_p(x.p);
            return SpaceSpec::Lp(x.p.conjugate(), x.n);
        }
        case SpaceFamily::sobolev:
            return SpaceSpec::Sobolev(-x.s, x.n);
        default:
            throw unsupported_parameters(
                std::string("dual_space supports BesovDiag, Lp, Sobolev (got ") + family_name(x.family) + ")");
    }
}

} // namespace fourmap
