#pragma once

#include "fourmap/rate.hpp"
#include "fourmap/space.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fourmap {

enum class MappingStatus {
    outside_source_region,
    outside_target_region,
    continuous_not_compact_limiting,
    compact,
};

inline const char* status_name(MappingStatus s) {
    switch (s) {
        case MappingStatus::outside_source_region: return "outside_source_region";
        case MappingStatus::outside_target_region: return "outside_target_region";
        case MappingStatus::continuous_not_compact_limiting: return "continuous_not_compact_limiting";
        case MappingStatus::compact: return "compact";
    }
    return "?";
}

/// Classification outcome for a Fourier mapping between the source/target
/// scales. `derivation` lists the theorem/equation tags that produced each
/// conclusion.
struct MappingVerdict {
    MappingStatus status = MappingStatus::compact;
    bool source_limiting = false;
    bool target_limiting = false;
    std::optional<RateLaw> rate;
    std::vector<std::string> derivation;
};

/// Verdict for the weighted embedding B^{s1}_{p1,q1}(w_alpha) -> B^{s2}_{p2,q2}.
struct EmbeddingVerdict {
    bool compact = false;
    Rational delta{0};
    Rational p_star_reciprocal{0};
    Rational rho{0};
    std::optional<RateLaw> rate;
    bool open = false;   // delta == alpha with rho == 0: no asserted envelope
    std::vector<std::string> derivation;
};

struct LorentzSourceVerdict {
    MappingVerdict verdict;
    SpaceSpec target;    // Holder space C^{-n/p'}
};

// ---------------------------------------------------------------------------
// Rate-case tables. Each three-case law is data: a branch selector plus one
// row per branch, so the full table can be rendered for documentation.
// ---------------------------------------------------------------------------

struct RateContext {
    Rational s1, s2;
    Index p;
    int n;
    Rational alpha;   // weighted-embedding tables only
    Rational q_gap;   // 1/q2 - 1/q1 where relevant
};

struct RateCaseRow {
    std::string condition;   // printable branch predicate
    std::string law;         // printable law template
    std::function<RateLaw(const RateContext&)> build;
};

struct RateCaseTable {
    std::string tag;         // citation tag for the derivation list
    std::string domain;      // printable parameter range
    BoundType bound;
    // returns -1, 0, +1 for below / on / above the branch pivot
    std::function<int(const RateContext&)> branch;
    std::array<RateCaseRow, 3> rows;  // [0]: >, [1]: =, [2]: <
};

namespace tables {

inline int cmp(const Rational& a, const Rational& b) {
    if (a > b) return +1;
    if (a == b) return 0;
    return -1;
}

// e_k(F) for H^{s1} -> H^{s2}, equivalence; branch on s2 vs -s1.
inline const RateCaseTable& fourier_p2() {
    static const RateCaseTable t{
        "(4.31)", "p = 2, s1 > 0 > s2", BoundType::equivalence,
        [](const RateContext& c) { return cmp(c.s2, -c.s1); },
        {RateCaseRow{"s2 > -s1", "k^{s2/n}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s2 / Rational(c.n), BoundType::equivalence);
             }},
         RateCaseRow{"s2 = -s1", "(k/log k)^{s2/n}",
             [](const RateContext& c) {
                 return RateLaw::k_over_logk(c.s2 / Rational(c.n), BoundType::equivalence);
             }},
         RateCaseRow{"s2 < -s1", "k^{-s1/n}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.s1 / Rational(c.n), BoundType::equivalence);
             }}}};
    return t;
}

// Upper bound for B^{s1}_p -> B^{s2}_p, 1 < p < 2; branch on s2 vs d - s1.
inline const RateCaseTable& fourier_p_below2() {
    static const RateCaseTable t{
        "(4.33)", "1 < p < 2, s1 > d^n_p, s2 < 0", BoundType::upper_bound,
        [](const RateContext& c) { return cmp(c.s2, d_np(c.p, c.n) - c.s1); },
        {RateCaseRow{"s2 > d^n_p - s1", "k^{s2/n}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s2 / Rational(c.n), BoundType::upper_bound);
             }},
         RateCaseRow{"s2 = d^n_p - s1", "(k/log k)^{s2/n} (log k)^{1/p - 1/2}",
             [](const RateContext& c) {
                 return RateLaw::k_over_logk_log(c.s2 / Rational(c.n),
                                                 c.p.recip() - Rational(1, 2),
                                                 BoundType::upper_bound);
             }},
         RateCaseRow{"s2 < d^n_p - s1", "k^{-s1/n + 2(1/p - 1/2)}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.s1 / Rational(c.n) + d_np(c.p, c.n) / Rational(c.n),
                                       BoundType::upper_bound);
             }}}};
    return t;
}

// Upper bound for B^{s1}_p -> B^{s2}_p, 2 < p < inf; dual to the previous table.
inline const RateCaseTable& fourier_p_above2() {
    static const RateCaseTable t{
        "(4.35)", "2 < p < inf, s1 > 0, s2 < d^n_p", BoundType::upper_bound,
        [](const RateContext& c) { return cmp(c.s2, d_np(c.p, c.n) - c.s1); },
        {RateCaseRow{"s2 > d^n_p - s1", "k^{s2/n - 2(1/p - 1/2)}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s2 / Rational(c.n) - d_np(c.p, c.n) / Rational(c.n),
                                       BoundType::upper_bound);
             }},
         RateCaseRow{"s2 = d^n_p - s1", "(k/log k)^{-s1/n} (log k)^{1/2 - 1/p}",
             [](const RateContext& c) {
                 return RateLaw::k_over_logk_log(-c.s1 / Rational(c.n),
                                                 Rational(1, 2) - c.p.recip(),
                                                 BoundType::upper_bound);
             }},
         RateCaseRow{"s2 < d^n_p - s1", "k^{-s1/n}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.s1 / Rational(c.n), BoundType::upper_bound);
             }}}};
    return t;
}

// General fine indices, 1 < p <= 2: two-branch upper bound; the line
// s1 + s2 = d^n_p is left open.
inline const RateCaseTable& fourier_general_q_below2() {
    static const RateCaseTable t{
        "(4.51)", "1 < p <= 2, s1 > d^n_p, s2 < 0, any q1, q2", BoundType::upper_bound,
        [](const RateContext& c) { return cmp(c.s2, d_np(c.p, c.n) - c.s1); },
        {RateCaseRow{"s2 > d^n_p - s1", "k^{s2/n}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s2 / Rational(c.n), BoundType::upper_bound);
             }},
         RateCaseRow{"s2 = d^n_p - s1", "open",
             [](const RateContext&) { return RateLaw::open_case(); }},
         RateCaseRow{"s2 < d^n_p - s1", "k^{-s1/n + 2(1/p - 1/2)}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.s1 / Rational(c.n) + d_np(c.p, c.n) / Rational(c.n),
                                       BoundType::upper_bound);
             }}}};
    return t;
}

inline const RateCaseTable& fourier_general_q_above2() {
    static const RateCaseTable t{
        "(4.53)", "2 <= p < inf, s1 > 0, s2 < d^n_p, any q1, q2", BoundType::upper_bound,
        [](const RateContext& c) { return cmp(c.s2, d_np(c.p, c.n) - c.s1); },
        {RateCaseRow{"s2 > d^n_p - s1", "k^{s2/n - 2(1/p - 1/2)}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s2 / Rational(c.n) - d_np(c.p, c.n) / Rational(c.n),
                                       BoundType::upper_bound);
             }},
         RateCaseRow{"s2 = d^n_p - s1", "open",
             [](const RateContext&) { return RateLaw::open_case(); }},
         RateCaseRow{"s2 < d^n_p - s1", "k^{-s1/n}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.s1 / Rational(c.n), BoundType::upper_bound);
             }}}};
    return t;
}

// Conjectural envelope for C^{s1} -> C^{s2} (p = inf), s1 > 0, s2 + n < 0;
// branch on s1 + s2 + n vs 0.
inline const RateCaseTable& fourier_holder_conjecture() {
    static const RateCaseTable t{
        "(5.3)", "p = inf, s1 > 0, s2 + n < 0", BoundType::conjecture,
        [](const RateContext& c) { return cmp(c.s1 + c.s2 + Rational(c.n), Rational(0)); },
        {RateCaseRow{"s1 + s2 + n > 0", "k^{s2/n + 1}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s2 / Rational(c.n) + Rational(1), BoundType::conjecture);
             }},
         RateCaseRow{"s1 + s2 + n = 0", "(k/log k)^{-s1/n} (log k)^{1/2}",
             [](const RateContext& c) {
                 return RateLaw::k_over_logk_log(-c.s1 / Rational(c.n), Rational(1, 2),
                                                 BoundType::conjecture);
             }},
         RateCaseRow{"s1 + s2 + n < 0", "k^{-s1/n}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.s1 / Rational(c.n), BoundType::conjecture);
             }}}};
    return t;
}

// id: L_2(w_alpha) -> B^s_p; branch on delta = n(1/p - 1/2) - s vs alpha.
// (s1 carries s, alpha carries the weight exponent.)
inline const RateCaseTable& weighted_l2_to_besov() {
    static const RateCaseTable t{
        "(4.22)", "alpha > 0, s < 0, 0 <= 1/p < 1/2 + alpha/n, delta > 0", BoundType::equivalence,
        [](const RateContext& c) {
            Rational delta = Rational(c.n) * (c.p.recip() - Rational(1, 2)) - c.s1;
            return cmp(delta, c.alpha);
        },
        {RateCaseRow{"delta > alpha", "k^{-alpha/n + 1/p - 1/2}",
             [](const RateContext& c) {
                 return RateLaw::power(-c.alpha / Rational(c.n) + c.p.recip() - Rational(1, 2),
                                       BoundType::equivalence);
             }},
         RateCaseRow{"delta = alpha", "k^{s/n} (log k)^{alpha/n}",
             [](const RateContext& c) {
                 // for p = 2 this is exactly (k/log k)^{s/n}; keep that shape there
                 if (c.p == Index(2))
                     return RateLaw::k_over_logk(c.s1 / Rational(c.n), BoundType::equivalence);
                 return RateLaw::power_log(c.s1 / Rational(c.n), c.alpha / Rational(c.n),
                                           BoundType::equivalence);
             }},
         RateCaseRow{"delta < alpha", "k^{s/n}",
             [](const RateContext& c) {
                 return RateLaw::power(c.s1 / Rational(c.n), BoundType::equivalence);
             }}}};
    return t;
}

} // namespace tables

/// Rows of every rate-case table, for documentation output.
struct RateTableListing {
    std::string tag, domain, bound;
    std::array<std::pair<std::string, std::string>, 3> rows;
};

inline std::vector<RateTableListing> rate_case_listings() {
    std::vector<RateTableListing> out;
    for (const RateCaseTable* t :
         {&tables::fourier_p2(), &tables::fourier_p_below2(), &tables::fourier_p_above2(),
          &tables::fourier_general_q_below2(), &tables::fourier_general_q_above2(),
          &tables::fourier_holder_conjecture(), &tables::weighted_l2_to_besov()}) {
        RateTableListing l;
        l.tag = t->tag;
        l.domain = t->domain;
        l.bound = bound_name(t->bound);
        for (int i = 0; i < 3; ++i) l.rows[i] = {t->rows[i].condition, t->rows[i].law};
        out.push_back(std::move(l));
    }
    return out;
}

namespace detail {

inline RateLaw pick(const RateCaseTable& t, const RateContext& c, std::vector<std::string>& derivation) {
    int b = t.branch(c);
    const RateCaseRow& row = t.rows[b > 0 ? 0 : (b == 0 ? 1 : 2)];
    derivation.push_back(t.tag + " " + row.condition);
    return row.build(c);
}

} // namespace detail

// ---------------------------------------------------------------------------
// classify_fourier: F between the source scale X^{s1}_p and target scale
// Y^{s2}_p (fine indices q1, q2 optional, default p).
// ---------------------------------------------------------------------------

inline MappingVerdict classify_fourier(const Index& p, const Rational& s1, const Rational& s2,
                                       int n, std::optional<Index> q1 = {},
                                       std::optional<Index> q2 = {}) {
    if (n < 1) throw std::domain_error("classify_fourier requires n >= 1");

    // p = inf is admitted only on the conjectural Holder path: s1 > 0, s2 + n < 0.
    if (p.is_inf()) {
        if (q1 && !q1->is_inf())
            throw unsupported_parameters("p = inf forces q1 = inf (Holder scale), got q1 = " + q1->str());
        if (q2 && !q2->is_inf())
            throw unsupported_parameters("p = inf forces q2 = inf (Holder scale), got q2 = " + q2->str());
        if (!(s1 > Rational(0)) || !(s2 + Rational(n) < Rational(0)))
            throw unsupported_parameters(
                "p = inf is supported only for s1 > 0 and s2 < -n ((5.2)); got s1 = " + s1.str() +
                ", s2 = " + s2.str());
        MappingVerdict v;
        v.status = MappingStatus::compact;
        v.source_limiting = false;
        v.target_limiting = false;
        v.derivation = {"(5.2)", "Problem 5.6"};
        RateContext ctx{s1, s2, p, n, Rational(0), Rational(0)};
        v.rate = detail::pick(tables::fourier_holder_conjecture(), ctx, v.derivation);
        return v;
    }

    if (!(p.value() > Rational(1)))
        throw unsupported_parameters("classify_fourier requires 1 < p < inf (p = " + p.str() + ")");

    const Rational tp = tau_plus(p, n), tm = tau_minus(p, n), d = d_np(p, n);
    const bool q_diagonal = (!q1 || *q1 == p) && (!q2 || *q2 == p);

    MappingVerdict v;
    v.source_limiting = (s1 == tp);
    v.target_limiting = (s2 == tm);

    if (s1 < tp) {
        v.status = MappingStatus::outside_source_region;
        v.derivation = {"(2.14)", "Corollary 3.3"};
        return v;
    }
    if (s2 > tm) {
        v.status = MappingStatus::outside_target_region;
        v.derivation = {"(2.15)", "Corollary 3.3"};
        return v;
    }
    if (v.source_limiting || v.target_limiting) {
        if (!q_diagonal)
            throw unsupported_parameters(
                "fine index q != p on a limiting line is not covered (Problem 5.2): " +
                std::string("s1 = ") + s1.str() + ", s2 = " + s2.str() + ", p = " + p.str());
        v.status = MappingStatus::continuous_not_compact_limiting;
        v.derivation = {"Proposition 3.1", "Definition 2.3(ii)"};
        return v;
    }

    // strict interior of both regions: compact
    v.status = MappingStatus::compact;
    v.derivation = {"Theorem 3.2"};
    RateContext ctx{s1, s2, p, n, Rational(0), Rational(0)};

    if (q_diagonal) {
        if (p == Index(2)) {
            v.derivation.push_back("Theorem 4.8(ii)");
            v.rate = detail::pick(tables::fourier_p2(), ctx, v.derivation);
        } else if (p.value() < Rational(2)) {
            v.derivation.push_back("Theorem 4.8(iii)");
            v.rate = detail::pick(tables::fourier_p_below2(), ctx, v.derivation);
        } else {
            v.derivation.push_back("Theorem 4.8(iv)");
            v.rate = detail::pick(tables::fourier_p_above2(), ctx, v.derivation);
        }
        return v;
    }

    // general fine indices
    v.derivation.push_back("Corollary 4.10");
    if (s1 + s2 == d) {
        // excluded line: the q-dependence is unresolved
        v.derivation.push_back("Problem 5.3");
        v.rate = RateLaw::open_case();
        return v;
    }
    if (p.value() < Rational(2) || p == Index(2))
        v.rate = detail::pick(tables::fourier_general_q_below2(), ctx, v.derivation);
    else
        v.rate = detail::pick(tables::fourier_general_q_above2(), ctx, v.derivation);
    return v;
}

// ---------------------------------------------------------------------------
// classify_lorentz_source: F: L_{p,r} -> C^{-n/p'}, continuous, never compact.
// ---------------------------------------------------------------------------

inline LorentzSourceVerdict classify_lorentz_source(const Index& p, const Index& r, int n) {
    if (n < 1) throw std::domain_error("classify_lorentz_source requires n >= 1");
    if (p.is_inf() || !(p.value() > Rational(1)))
        throw unsupported_parameters("classify_lorentz_source requires 1 < p < inf (p = " + p.str() + ")");
    if (!r.is_inf() && !(r.value() > Rational(0)))
        throw unsupported_parameters("classify_lorentz_source requires 0 < r <= inf (r = " + r.str() + ")");

    const Rational minus_n_over_pprime = -Rational(n) * p.conjugate().recip();

    LorentzSourceVerdict out;
    out.target = SpaceSpec::Holder(minus_n_over_pprime, n);
    out.verdict.status = MappingStatus::continuous_not_compact_limiting;
    // the L_p-type source sits on the limiting line exactly when tau^{n+}_p = 0
    out.verdict.source_limiting = (tau_plus(p, n) == Rational(0));
    out.verdict.target_limiting = false;
    out.verdict.derivation = {"Remark 2.6", "(2.32)"};
    if (p.value() > Rational(2))
        out.verdict.derivation.push_back("(2.34)");
    else
        out.verdict.derivation.push_back("(2.33)");
    return out;
}

// ---------------------------------------------------------------------------
// classify_embedding: id: B^{s1}_{p1,q1}(w_alpha) -> B^{s2}_{p2,q2}.
// ---------------------------------------------------------------------------

inline EmbeddingVerdict classify_embedding(const SpaceSpec& src_in, const SpaceSpec& dst_in) {
    SpaceSpec src = src_in.normalized(), dst = dst_in.normalized();
    if (src.family != SpaceFamily::weighted_besov)
        throw unsupported_parameters(
            std::string("classify_embedding source must be a weighted Besov space (got ") +
            family_name(src_in.family) + ")");
    if (dst.family != SpaceFamily::besov)
        throw unsupported_parameters(
            std::string("classify_embedding target must be an unweighted Besov space (got ") +
            family_name(dst_in.family) + ")");
    if (src.n != dst.n) throw unsupported_parameters("classify_embedding requires equal dimensions");
    if (src.alpha < Rational(0))
        throw unsupported_parameters("classify_embedding requires alpha >= 0 (alpha = " + src.alpha.str() + ")");

    const int n = src.n;
    const Rational s1 = src.s, s2 = dst.s, alpha = src.alpha;

    EmbeddingVerdict v;
    v.delta = (s1 - Rational(n) * src.p.recip()) - (s2 - Rational(n) * dst.p.recip());
    v.p_star_reciprocal = src.p.recip() + alpha / Rational(n);
    v.rho = (s1 - s2) / Rational(n) + dst.q.recip() - src.q.recip();
    v.derivation = {"(4.8)", "(4.12)"};

    const bool compact = (s1 > s2) && (v.delta > Rational(0)) && (alpha > Rational(0)) &&
                         (dst.p.recip() < v.p_star_reciprocal);
    v.compact = compact;
    v.derivation.push_back("(4.9)");
    if (!compact) return v;

    v.derivation.push_back("Proposition 4.5");
    const Rational rate_main = -(s1 - s2) / Rational(n);
    if (v.delta < alpha) {
        v.derivation.push_back("(4.10) delta < alpha");
        v.rate = RateLaw::power(rate_main, BoundType::equivalence);
    } else if (v.delta > alpha) {
        v.derivation.push_back("(4.11) delta > alpha");
        v.rate = RateLaw::power(-alpha / Rational(n) + dst.p.recip() - src.p.recip(),
                                BoundType::equivalence);
    } else if (v.rho < Rational(0)) {
        v.derivation.push_back("(4.13) delta = alpha, rho < 0");
        v.rate = RateLaw::power(rate_main, BoundType::equivalence);
    } else if (v.rho > Rational(0)) {
        v.derivation.push_back("(4.14) delta = alpha, rho > 0");
        v.rate = RateLaw::power_log(rate_main, v.rho, BoundType::equivalence);
    } else {
        // delta = alpha and rho = 0 is not covered by the rate table
        v.open = true;
        v.derivation.push_back("delta = alpha, rho = 0: open");
    }
    return v;
}

// ---------------------------------------------------------------------------
// corollary_4_7_rate: e_k(id: L_2(w_alpha) -> B^s_p), three-case equivalence.
// ---------------------------------------------------------------------------

inline RateLaw corollary_4_7_rate(const Rational& alpha, const Rational& s, const Index& p, int n,
                                  std::vector<std::string>* derivation = nullptr) {
    if (n < 1) throw std::domain_error("corollary_4_7_rate requires n >= 1");
    if (!(alpha > Rational(0)))
        throw unsupported_parameters("corollary_4_7_rate requires alpha > 0 ((4.20)); alpha = " + alpha.str());
    if (!(s < Rational(0)))
        throw unsupported_parameters("corollary_4_7_rate requires s < 0 ((4.20)); s = " + s.str());
    const Rational inv_p = p.recip();
    if (inv_p < Rational(0) || !(inv_p < Rational(1, 2) + alpha / Rational(n)))
        throw unsupported_parameters("corollary_4_7_rate requires 0 <= 1/p < 1/2 + alpha/n ((4.20)); 1/p = " +
                                     inv_p.str());
    const Rational delta = Rational(n) * (inv_p - Rational(1, 2)) - s;
    if (!(delta > Rational(0)))
        throw unsupported_parameters("corollary_4_7_rate requires delta = n(1/p - 1/2) - s > 0 ((4.20)); delta = " +
                                     delta.str());

    std::vector<std::string> local;
    std::vector<std::string>& der = derivation ? *derivation : local;
    der.push_back("Corollary 4.7");
    der.push_back(p == Index(2) ? "(4.24)" : "(4.22)");
    RateContext ctx{s, Rational(0), p, n, alpha, Rational(0)};
    return detail::pick(tables::weighted_l2_to_besov(), ctx, der);
}

// ---------------------------------------------------------------------------
// region_grid: tag points of the (1/p, s) half-plane.
// ---------------------------------------------------------------------------

struct RegionPoint {
    Rational inv_p;
    Rational s;
    std::vector<std::string> tags;
};

inline std::vector<std::string> region_tags(const Rational& inv_p, const Rational& s, int n) {
    if (!(inv_p > Rational(0)) || !(inv_p < Rational(1)))
        throw std::domain_error("region point requires 0 < 1/p < 1 (1/p = " + inv_p.str() + ")");
    Index p(Rational(1) / inv_p);
    const Rational tp = tau_plus(p, n), tm = tau_minus(p, n);
    std::vector<std::string> tags;
    if (s == tp) tags.push_back("source_limiting_boundary");
    if (s == tm) tags.push_back("target_limiting_boundary");
    if (!tags.empty()) return tags;
    if (s > tp) return {"source_region"};
    if (s < tm) return {"target_region"};
    return {"excluded"};
}

inline std::vector<RegionPoint> region_grid(int p_steps, const Rational& s_min, const Rational& s_max,
                                            int s_steps, int n) {
    if (p_steps < 2) throw std::domain_error("region_grid requires p_steps >= 2");
    if (s_max < s_min) throw std::domain_error("region_grid requires s_min <= s_max");
    if (s_steps < 1) throw std::domain_error("region_grid requires s_steps >= 1");
    std::vector<Rational> svals;
    if (s_min == s_max) {
        svals.push_back(s_min);
    } else {
        int m = s_steps < 2 ? 2 : s_steps;
        for (int j = 0; j < m; ++j)
            svals.push_back(s_min + (s_max - s_min) * Rational(j) / Rational(m - 1));
    }
    std::vector<RegionPoint> out;
    for (int i = 1; i <= p_steps; ++i) {
        Rational inv_p(i, p_steps + 1);
        for (const Rational& s : svals) out.push_back({inv_p, s, region_tags(inv_p, s, n)});
    }
    return out;
}

} // namespace fourmap
