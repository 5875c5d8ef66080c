#pragma once

#include "fourmap/classify.hpp"
#include "fourmap/entropy.hpp"
#include "fourmap/kernel.hpp"
#include "fourmap/rate.hpp"
#include "fourmap/space.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace fourmap {

using json = nlohmann::json;

// Stable JSON shapes; rational exponents serialize as exact "a/b" strings.

inline json to_json(const RateLaw& r) {
    return json{{"form", form_name(r.form)},
                {"power_exponent", r.power_exponent.frac_str()},
                {"log_exponent", r.log_exponent.frac_str()},
                {"bound_type", bound_name(r.bound_type)}};
}

inline json to_json(const MappingVerdict& v) {
    json j{{"status", status_name(v.status)},
           {"source_limiting", v.source_limiting},
           {"target_limiting", v.target_limiting},
           {"derivation", v.derivation}};
    j["rate"] = v.rate ? to_json(*v.rate) : json(nullptr);
    return j;
}

inline json to_json(const SpaceSpec& s) {
    json j{{"family", family_name(s.family)}, {"n", s.n}};
    switch (s.family) {
        case SpaceFamily::lp: j["p"] = s.p.str(); break;
        case SpaceFamily::lorentz: j["p"] = s.p.str(); j["r"] = s.r.str(); break;
        case SpaceFamily::sobolev: j["s"] = s.s.frac_str(); break;
        case SpaceFamily::holder: j["s"] = s.s.frac_str(); break;
        case SpaceFamily::besov_diag: j["s"] = s.s.frac_str(); j["p"] = s.p.str(); break;
        case SpaceFamily::sobolev_fractional: j["s"] = s.s.frac_str(); j["p"] = s.p.str(); break;
        case SpaceFamily::weighted_l2: j["alpha"] = s.alpha.frac_str(); break;
        default:
            j["s"] = s.s.frac_str(); j["p"] = s.p.str(); j["q"] = s.q.str();
            if (s.family == SpaceFamily::weighted_besov) j["alpha"] = s.alpha.frac_str();
    }
    return j;
}

inline json to_json(const LorentzSourceVerdict& v) {
    json j = to_json(v.verdict);
    j["target"] = to_json(v.target);
    return j;
}

inline json to_json(const EmbeddingVerdict& v) {
    json j{{"compact", v.compact},
           {"delta", v.delta.frac_str()},
           {"p_star_reciprocal", v.p_star_reciprocal.frac_str()},
           {"rho", v.rho.frac_str()},
           {"open", v.open},
           {"derivation", v.derivation}};
    j["rate"] = v.rate ? to_json(*v.rate) : json(nullptr);
    return j;
}

inline json to_json(const DecayFit& f) {
    return json{{"exponent", f.power_exponent},
                {"r2", f.r_squared},
                {"window", {f.k_lo, f.k_hi}},
                {"meta", {{"sequence_length", f.sequence_length}}}};
}

inline json to_json(const RateCheckReport& r) {
    const char* name = r.outcome == RateCheckOutcome::passed
                           ? "pass"
                           : (r.outcome == RateCheckOutcome::failed ? "fail" : "reported_only");
    json j{{"outcome", name},
           {"measured", r.measured},
           {"predicted", r.predicted},
           {"tolerance", r.tolerance},
           {"r2", r.r_squared}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const EntropyBracket& b) {
    return json{{"k", b.k}, {"lower", b.lower}, {"upper", b.upper}};
}

inline std::string region_grid_csv(const std::vector<RegionPoint>& pts) {
    std::ostringstream os;
    os << "inv_p,s,tag\n";
    for (const RegionPoint& p : pts) {
        os << p.inv_p.str() << "," << p.s.str() << ",";
        for (std::size_t i = 0; i < p.tags.size(); ++i) {
            if (i) os << ";";
            os << p.tags[i];
        }
        os << "\n";
    }
    return os.str();
}

inline json region_grid_json(const std::vector<RegionPoint>& pts) {
    json rows = json::array();
    for (const RegionPoint& p : pts)
        rows.push_back(json{{"inv_p", p.inv_p.str()}, {"s", p.s.str()}, {"tags", p.tags}});
    return rows;
}

inline std::string sigma_csv(const std::vector<double>& sigma) {
    std::ostringstream os;
    os.precision(17);
    os << "k,sigma\n";
    for (std::size_t i = 0; i < sigma.size(); ++i) os << (i + 1) << "," << sigma[i] << "\n";
    return os.str();
}

inline std::string bracket_csv(const std::vector<EntropyBracket>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "k,lower,upper\n";
    for (const EntropyBracket& b : rows) os << b.k << "," << b.lower << "," << b.upper << "\n";
    return os.str();
}

} // namespace fourmap
