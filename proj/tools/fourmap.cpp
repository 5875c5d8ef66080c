// fourmap: batch front end for the Fourier-mapping toolkit.
// Subcommands: classify, region-grid, norm, extremal-demo, svd-rates,
// entropy-bounds. Rational flags are parsed exactly ("1/3", "0.25", "inf");
// verdict content never affects the exit code, malformed or unsupported
// queries do.

#include "fourmap/classify.hpp"
#include "fourmap/entropy.hpp"
#include "fourmap/fft.hpp"
#include "fourmap/grid.hpp"
#include "fourmap/kernel.hpp"
#include "fourmap/norms.hpp"
#include "fourmap/serialize.hpp"
#include "fourmap/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fourmap;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream os(path);
            if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
            os << text;
            if (text.empty() || text.back() != '\n') os << "\n";
        }
    }
    void emit(const json& j) const { emit(j.dump(2)); }
};

SpaceSpec space_from_flags(const std::string& family, const std::string& s, const std::string& p,
                           const std::string& q, const std::string& r, const std::string& alpha,
                           int n) {
    auto srat = [&](const std::string& v) { return parse_rational(v); };
    auto sidx = [&](const std::string& v) { return parse_index(v); };
    if (family == "Lp" || family == "L") return SpaceSpec::Lp(sidx(p), n);
    if (family == "Lorentz") return SpaceSpec::Lorentz(sidx(p), sidx(r), n);
    if (family == "B" || family == "Besov") return SpaceSpec::Besov(srat(s), sidx(p), sidx(q), n);
    if (family == "Bp" || family == "BesovDiag") return SpaceSpec::BesovDiag(srat(s), sidx(p), n);
    if (family == "H" || family == "Sobolev") return SpaceSpec::Sobolev(srat(s), n);
    if (family == "C" || family == "Holder") return SpaceSpec::Holder(srat(s), n);
    if (family == "WB" || family == "WeightedBesov")
        return SpaceSpec::WeightedBesov(srat(s), sidx(p), sidx(q), srat(alpha), n);
    if (family == "WL2" || family == "WeightedL2") return SpaceSpec::WeightedL2(srat(alpha), n);
    throw unsupported_parameters("unknown space family '" + family +
                                 "' (use Lp, Lorentz, B, Bp, H, C, WB, WL2)");
}

GridFunction load_or_generate(const std::string& input, const std::string& builtin, int n, double L,
                              int N, double sigma, double center, double width, double kx,
                              double ky) {
    if (!input.empty()) return read_grid(input);
    if (builtin.empty())
        throw unsupported_parameters("norm needs --input FILE or --builtin NAME");
    std::map<std::string, double> params{{"sigma", sigma}, {"center", center}, {"width", width},
                                         {"kx", kx},       {"ky", ky}};
    return make_builtin(builtin, n, L, N, params);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fourier mapping toolkit: exact classification and numerical verification"};
    app.require_subcommand(1);

    Output out;
    long seed = 12345;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized searches");

    // --- classify ---------------------------------------------------------
    auto* cls = app.add_subcommand("classify", "classify a Fourier mapping or weighted embedding");
    std::string c_p, c_s1, c_s2, c_q1, c_q2, c_r, c_alpha, c_s, c_p1, c_p2;
    int c_n = 1;
    bool c_lorentz = false, c_embedding = false, c_weights_rate = false, c_cases = false;
    cls->add_option("--p", c_p, "integrability index p (rational or inf)");
    cls->add_option("--s1", c_s1, "source smoothness");
    cls->add_option("--s2", c_s2, "target smoothness");
    cls->add_option("--n", c_n, "dimension");
    cls->add_option("--q1", c_q1, "source fine index");
    cls->add_option("--q2", c_q2, "target fine index");
    cls->add_flag("--lorentz", c_lorentz, "classify the Lorentz-source mapping (needs --p, --r)");
    cls->add_option("--r", c_r, "Lorentz second index");
    cls->add_flag("--embedding", c_embedding,
                  "classify the weighted embedding (needs --s1 --p1 --q1 --alpha --s2 --p2 --q2)");
    cls->add_option("--p1", c_p1, "embedding source p");
    cls->add_option("--p2", c_p2, "embedding target p");
    cls->add_option("--alpha", c_alpha, "weight exponent");
    cls->add_flag("--weights-rate", c_weights_rate,
                  "rate of id: L_2(w_alpha) -> B^s_p (needs --alpha --s --p)");
    cls->add_option("--s", c_s, "smoothness for --weights-rate");
    cls->add_flag("--cases", c_cases, "print the full rate-case table and exit");

    // --- region-grid ------------------------------------------------------
    auto* reg = app.add_subcommand("region-grid", "tabulate region tags over the (1/p, s) plane");
    int r_n = 1, r_psteps = 0, r_ssteps = 0;
    std::string r_smin, r_smax;
    reg->add_option("--n", r_n, "dimension");
    reg->add_option("--p-steps", r_psteps, "number of interior 1/p samples")->required();
    reg->add_option("--s-min", r_smin, "lower smoothness bound")->required();
    reg->add_option("--s-max", r_smax, "upper smoothness bound")->required();
    reg->add_option("--s-steps", r_ssteps, "number of smoothness samples")->required();

    // --- norm -------------------------------------------------------------
    auto* nrm = app.add_subcommand("norm", "norm of a sampled function in a given space");
    std::string n_input, n_builtin, n_family = "H", n_s = "0", n_p = "2", n_q = "2", n_r = "2",
                n_alpha = "0";
    int n_n = 1, n_N = 1024;
    double n_L = 16.0, n_sigma = 1.0, n_center = 0.87, n_width = 1.0 / 80.0, n_kx = 1.0, n_ky = 0.0;
    nrm->add_option("--input", n_input, "grid function file (header 'n N L', rows 're im')");
    nrm->add_option("--builtin", n_builtin, "builtin generator: gaussian, bump, modulated-bump");
    nrm->add_option("--space", n_family, "space family: Lp, Lorentz, B, Bp, H, C, WB, WL2");
    nrm->add_option("--s", n_s, "smoothness");
    nrm->add_option("--p", n_p, "integrability");
    nrm->add_option("--q", n_q, "fine index");
    nrm->add_option("--r", n_r, "Lorentz second index");
    nrm->add_option("--alpha", n_alpha, "weight exponent");
    nrm->add_option("--n", n_n, "dimension (builtin)");
    nrm->add_option("--N", n_N, "samples per axis (builtin)");
    nrm->add_option("--L", n_L, "domain half-width (builtin)");
    nrm->add_option("--sigma", n_sigma, "gaussian width");
    nrm->add_option("--center", n_center, "bump shell center");
    nrm->add_option("--width", n_width, "bump / modulated-bump width");
    nrm->add_option("--kx", n_kx, "modulation wavevector, first axis");
    nrm->add_option("--ky", n_ky, "modulation wavevector, second axis");

    // --- extremal-demo ----------------------------------------------------
    auto* ext = app.add_subcommand("extremal-demo", "build a witness family and report separation");
    std::string e_kind = "dilated", e_p = "4", e_ts = "", e_talpha = "0";
    int e_n = 1, e_members = 7, e_N = 0;
    double e_L = 0.0, e_center = 0.87, e_width = 1.0 / 80.0, e_sigma = 0.5;
    ext->add_option("--kind", e_kind, "dilated or modulated");
    ext->add_option("--p", e_p, "L_p normalization scale");
    ext->add_option("--n", e_n, "dimension");
    ext->add_option("--members", e_members, "member count (dilated: levels 0..members-1)");
    ext->add_option("--target-s", e_ts, "target Holder smoothness (default -n/p')");
    ext->add_option("--N", e_N, "samples per axis (default per kind)");
    ext->add_option("--L", e_L, "domain half-width (default per kind)");
    ext->add_option("--center", e_center, "dilated profile shell center");
    ext->add_option("--width", e_width, "dilated profile shell width");
    ext->add_option("--sigma", e_sigma, "modulated spectral profile width");

    // --- svd-rates --------------------------------------------------------
    auto* svd = app.add_subcommand("svd-rates", "kernel SVD decay vs the predicted envelope");
    std::string v_s1 = "1", v_s2 = "-2";
    int v_N = 512, v_wlo = 8, v_whi = 64;
    double v_L = 32.0, v_tol = 0.15;
    svd->add_option("--s1", v_s1, "source smoothness (rational, > 0)");
    svd->add_option("--s2", v_s2, "target smoothness (rational, < 0)");
    svd->add_option("--L", v_L, "domain half-width");
    svd->add_option("--N", v_N, "samples per axis");
    svd->add_option("--window-lo", v_wlo, "fit window lower k");
    svd->add_option("--window-hi", v_whi, "fit window upper k");
    svd->add_option("--tol", v_tol, "exponent tolerance for the pass/fail check");

    // --- entropy-bounds ---------------------------------------------------
    auto* ent = app.add_subcommand("entropy-bounds", "two-sided entropy-number brackets");
    std::string b_sigma;
    double b_rho = 1.0;
    int b_len = 0, b_klo = 1, b_khi = 8;
    bool b_brute = false;
    ent->add_option("--sigma", b_sigma, "comma-separated decreasing positive sequence");
    ent->add_option("--gen-power", b_rho, "generate sigma_j = j^{-rho}");
    ent->add_option("--gen-len", b_len, "length of the generated sequence");
    ent->add_option("--k-lo", b_klo, "first k");
    ent->add_option("--k-hi", b_khi, "last k");
    ent->add_flag("--brute", b_brute, "include the search estimate (dim <= 2, k <= 6)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed()) {
            if (c_cases) {
                json rows = json::array();
                for (const auto& t : rate_case_listings()) {
                    json r{{"tag", t.tag}, {"domain", t.domain}, {"bound", t.bound}};
                    json cases = json::array();
                    for (const auto& [cond, law] : t.rows)
                        cases.push_back(json{{"condition", cond}, {"law", law}});
                    r["cases"] = cases;
                    rows.push_back(r);
                }
                out.emit(rows);
                return 0;
            }
            if (c_lorentz) {
                if (c_p.empty() || c_r.empty())
                    throw unsupported_parameters("--lorentz needs --p and --r");
                out.emit(to_json(classify_lorentz_source(parse_index(c_p), parse_index(c_r), c_n)));
                return 0;
            }
            if (c_embedding) {
                if (c_s1.empty() || c_s2.empty() || c_p1.empty() || c_p2.empty() || c_alpha.empty())
                    throw unsupported_parameters(
                        "--embedding needs --s1 --p1 --q1 --alpha --s2 --p2 --q2");
                SpaceSpec src = SpaceSpec::WeightedBesov(
                    parse_rational(c_s1), parse_index(c_p1),
                    c_q1.empty() ? parse_index(c_p1) : parse_index(c_q1),
                    parse_rational(c_alpha), c_n);
                SpaceSpec dst = SpaceSpec::Besov(
                    parse_rational(c_s2), parse_index(c_p2),
                    c_q2.empty() ? parse_index(c_p2) : parse_index(c_q2), c_n);
                out.emit(to_json(classify_embedding(src, dst)));
                return 0;
            }
            if (c_weights_rate) {
                if (c_alpha.empty() || c_s.empty() || c_p.empty())
                    throw unsupported_parameters("--weights-rate needs --alpha --s --p");
                std::vector<std::string> der;
                RateLaw law = corollary_4_7_rate(parse_rational(c_alpha), parse_rational(c_s),
                                                 parse_index(c_p), c_n, &der);
                json j = to_json(law);
                j["derivation"] = der;
                out.emit(j);
                return 0;
            }
            if (c_p.empty() || c_s1.empty() || c_s2.empty())
                throw unsupported_parameters("classify needs --p --s1 --s2 [--n --q1 --q2]");
            std::optional<Index> q1, q2;
            if (!c_q1.empty()) q1 = parse_index(c_q1);
            if (!c_q2.empty()) q2 = parse_index(c_q2);
            out.emit(to_json(classify_fourier(parse_index(c_p), parse_rational(c_s1),
                                              parse_rational(c_s2), c_n, q1, q2)));
            return 0;
        }

        if (reg->parsed()) {
            auto pts = region_grid(r_psteps, parse_rational(r_smin), parse_rational(r_smax),
                                   r_ssteps, r_n);
            if (out.format == "json")
                out.emit(region_grid_json(pts));
            else
                out.emit(region_grid_csv(pts));
            return 0;
        }

        if (nrm->parsed()) {
            GridFunction g = load_or_generate(n_input, n_builtin, n_n, n_L, n_N, n_sigma, n_center,
                                              n_width, n_kx, n_ky);
            SpaceSpec spec = space_from_flags(n_family, n_s, n_p, n_q, n_r, n_alpha, g.n);
            json j{{"space", to_json(spec)}, {"n", g.n}, {"N", g.N}, {"L", g.L}};
            bool besov_like = spec.family == SpaceFamily::besov ||
                              spec.family == SpaceFamily::besov_diag ||
                              spec.family == SpaceFamily::holder ||
                              spec.family == SpaceFamily::weighted_besov;
            if (besov_like) {
                SpaceSpec c = spec.normalized();
                std::optional<double> alpha;
                if (c.family == SpaceFamily::weighted_besov) alpha = c.alpha.to_double();
                auto res = besov_norm(g, c.s.to_double(), c.p.to_double(), c.q.to_double(), alpha);
                j["value"] = res.total;
                j["truncation_level"] = res.truncation_level;
                j["out_of_band_fraction"] = res.out_of_band_fraction;
                json lv = json::array();
                for (auto& [lev, v] : res.per_level) lv.push_back(json{{"j", lev}, {"norm", v}});
                j["per_level"] = lv;
            } else {
                j["value"] = space_norm(g, spec);
            }
            if (out.format == "csv" && besov_like) {
                std::ostringstream os;
                os.precision(17);
                os << "j,norm\n";
                for (auto& lv : j["per_level"])
                    os << lv["j"] << "," << double(lv["norm"]) << "\n";
                out.emit(os.str());
            } else {
                out.emit(j);
            }
            return 0;
        }

        if (ext->parsed()) {
            Rational p = parse_rational(e_p);
            json j{{"kind", e_kind}, {"p", p.str()}, {"n", e_n}};
            if (e_kind == "dilated") {
                if (e_n != 1) throw unsupported_parameters("dilated demo supports n = 1");
                double L = e_L > 0 ? e_L : 96.0;
                int N = e_N > 0 ? e_N : 65536;
                GridFunction psi = make_bump(1, L, N, e_center, e_width);
                WitnessFamily fam = dilated_family(psi, p, 0, e_members - 1);
                Rational ts = e_ts.empty() ? -Rational(e_n) * Index(p).conjugate().recip()
                                           : parse_rational(e_ts);
                SpaceSpec target = SpaceSpec::Holder(ts, 1);
                auto rep = separation_matrix(fam, target);
                std::vector<double> lp;
                for (auto& [idx, m] : fam.members) lp.push_back(lp_norm(m, p.to_double()));
                double lmin = *std::min_element(lp.begin(), lp.end());
                double lmax = *std::max_element(lp.begin(), lp.end());
                j["target"] = to_json(target);
                j["lp_norms"] = lp;
                j["lp_relative_spread"] = (lmax - lmin) / lmin;
                j["member_norms"] = rep.member_norm;
                j["alignment_defect"] = fam.alignment_defect;
                j["min_separation"] = rep.min_off_diagonal;
                j["separation_threshold"] = 0.1 * rep.median_member_norm;
                out.emit(j);
            } else if (e_kind == "modulated") {
                double L = e_L > 0 ? e_L : 16.0;
                int N = e_N > 0 ? e_N : (e_n == 1 ? 1024 : 256);
                GridFunction psi = make_gaussian(e_n, L, N, e_sigma);
                std::vector<std::vector<long>> ms;
                int half = e_members / 2;
                for (int m = -half; m < -half + e_members; ++m) {
                    if (e_n == 1)
                        ms.push_back({m});
                    else
                        ms.push_back({m, 0});
                }
                WitnessFamily fam = modulated_family(psi, ms);
                Rational ts = e_ts.empty() ? -Rational(e_n) * Index(p).conjugate().recip()
                                           : parse_rational(e_ts);
                SpaceSpec target = SpaceSpec::Holder(ts, e_n);
                auto rep = separation_matrix(fam, target);
                std::vector<double> lp;
                for (auto& [idx, m] : fam.members) lp.push_back(lp_norm(m, p.to_double()));
                double lmin = *std::min_element(lp.begin(), lp.end());
                double lmax = *std::max_element(lp.begin(), lp.end());
                j["target"] = to_json(target);
                j["lp_norms"] = lp;
                j["lp_relative_spread"] = (lmax - lmin) / lmin;
                j["member_norms"] = rep.member_norm;
                j["min_separation"] = rep.min_off_diagonal;
                j["separation_threshold"] = 0.1 * rep.median_member_norm;
                out.emit(j);
            } else {
                throw unsupported_parameters("unknown family kind '" + e_kind +
                                             "' (use dilated or modulated)");
            }
            return 0;
        }

        if (svd->parsed()) {
            Rational s1 = parse_rational(v_s1), s2 = parse_rational(v_s2);
            KernelMatrix K = build_fourier_kernel(s1.to_double(), s2.to_double(), 1, v_L, v_N);
            auto sv = singular_values(K);
            DecayFit fit = singular_decay(sv, v_wlo, v_whi);
            MappingVerdict verdict = classify_fourier(Index(2), s1, s2, 1);
            RateCheckReport chk = rate_check(fit, *verdict.rate, v_tol);
            if (out.format == "csv") {
                out.emit(sigma_csv(sv));
            } else {
                json j = to_json(fit);
                j["meta"] = {{"s1", s1.str()}, {"s2", s2.str()}, {"n", 1}, {"L", v_L}, {"N", v_N}};
                j["predicted"] = to_json(*verdict.rate);
                j["check"] = to_json(chk);
                out.emit(j);
            }
            return 0;
        }

        if (ent->parsed()) {
            std::vector<double> sigma;
            if (!b_sigma.empty()) {
                std::stringstream ss(b_sigma);
                std::string tok;
                while (std::getline(ss, tok, ',')) sigma.push_back(std::stod(tok));
            } else if (b_len > 0) {
                for (int jj = 1; jj <= b_len; ++jj) sigma.push_back(std::pow(double(jj), -b_rho));
            }
            if (sigma.empty()) throw std::domain_error("entropy-bounds: empty sigma sequence");
            std::vector<EntropyBracket> rows;
            json jrows = json::array();
            for (int k = b_klo; k <= b_khi; ++k) {
                EntropyBracket br = entropy_bracket_diagonal(sigma, k);
                rows.push_back(br);
                json r = to_json(br);
                if (b_brute && sigma.size() <= 2 && k <= 6)
                    r["brute_force"] = brute_force_entropy(sigma, k, std::uint64_t(seed));
                jrows.push_back(r);
            }
            if (out.format == "csv")
                out.emit(bracket_csv(rows));
            else
                out.emit(jrows);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
