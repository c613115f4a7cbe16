#include "nullframe/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

namespace nf {

using nlohmann::json;

// + 0.0 folds negative zeros so reports compare byte for byte
json complex_json(cplx z) { return json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

namespace {

constexpr int kSchoutenPairs[10][2] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2},
                                       {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}};

std::string index_name(const char* prefix, std::initializer_list<int> idx) {
    std::string s = prefix;
    for (int i : idx) s += char('0' + i);
    return s;
}

// Runs f(i) for every point; results in point order, the first exception by index is rethrown.
std::vector<json> per_point(const AnalysisConfig& cfg, const std::function<json(std::size_t)>& f) {
    const std::size_t n = cfg.points.size();
    std::vector<json> out(n);
    std::vector<std::exception_ptr> err(n);
    unsigned workers = cfg.threads > 0 ? unsigned(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                out[i] = f(i);
            } catch (...) {
                err[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

json condition_json(const Condition& c) {
    json comps = json::object();
    for (const auto& [k, v] : c.components) comps[k] = complex_json(v);
    return json{{"pass", c.pass},
                {"pass_local", c.pass_local},
                {"residual", c.residual},
                {"local_residual", c.local_residual},
                {"tolerance", c.tolerance},
                {"components", comps}};
}

json factor_json(const FactorReport& f) {
    json roots = json::array();
    for (const auto& r : f.roots.roots) {
        json jr{{"multiplicity", r.multiplicity}, {"real_index", r.real_index}};
        if (r.point.is_infinity())
            jr["z"] = nullptr;
        else
            jr["z"] = complex_json(r.point.value());
        roots.push_back(jr);
    }
    return json{{"label", f.label},
                {"root_label", f.root_label},
                {"partition", f.roots.partition()},
                {"roots", roots},
                {"all_zero", f.roots.all_zero},
                {"root_residual", f.roots.residual},
                {"marginal", f.marginal},
                {"discriminant_kind", f.discriminant_kind},
                {"discriminant", f.discriminant},
                {"consistent", f.consistent}};
}

GSTolerances gs_tolerances(const AnalysisConfig& cfg) {
    GSTolerances t;
    t.rel *= cfg.tol_scale;
    t.identity *= cfg.tol_scale;
    return t;
}

PetrovOptions petrov_options(const AnalysisConfig& cfg, double curvature) {
    PetrovOptions o;
    o.reality *= cfg.tol_scale;
    o.zero *= cfg.tol_scale * curvature;
    return o;
}

void check_coframe_reality(const CoframeSpec& spec, const FrameData& d) {
    if (spec.signature == Signature::Complex) return;
    const RealityReport rep = check_reality(d.ev, spec.signature);
    if (rep.pass) return;
    std::string msg = "coframe violates the reality conditions of tag " + to_string(spec.signature) + ":";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw RealityViolated(msg);
}

json point_header(const Point& p, std::size_t i) {
    return json{{"index", i}, {"x", {p[0], p[1], p[2], p[3]}}};
}

double curvature_scale(const FrameData& d) {
    double m = 1.0;
    for (int n = 0; n < 5; ++n) m = std::max({m, std::abs(d.scalars.Psi(n)), std::abs(d.scalars.PsiP(n))});
    for (const auto& r : d.scalars.P)
        for (const auto& v : r) m = std::max(m, std::abs(v.value()));
    return m;
}

json analyze_point(const AnalysisConfig& cfg, std::size_t i) {
    const Point& p = cfg.points[i];
    const FrameData d = compute_frame_data(cfg.spec, p, cfg.order);
    check_coframe_reality(cfg.spec, d);
    json j = point_header(p, i);
    json warnings = json::array();

    json unprimed = json::object(), primed = json::object();
    for (int l = 0; l < 12; ++l) {
        unprimed[kLetterNames[l]] = complex_json(d.spin(Letter(l)));
        primed[kLetterNames[l]] = complex_json(d.spin.primed(Letter(l)));
    }
    j["spin"] = {{"unprimed", unprimed}, {"primed", primed}};

    if (!d.has_curvature) {
        warnings.push_back("order " + std::to_string(cfg.order) + " too low for curvature (needs 2)");
    } else {
        json psi = json::object(), psip = json::object();
        for (int n = 0; n < 5; ++n) {
            psi["psi" + std::to_string(n)] = complex_json(d.scalars.Psi(n));
            psip["psi" + std::to_string(n)] = complex_json(d.scalars.PsiP(n));
        }
        j["psi"] = psi;
        j["psi_primed"] = psip;
        json P = json::object();
        for (const auto& ab : kSchoutenPairs)
            P[index_name("P", {ab[0], ab[1]})] = complex_json(d.scalars.P[ab[0] - 1][ab[1] - 1].value());
        j["schouten"] = P;
        j["scalar_curvature"] = complex_json(d.scalars.R.value());
        j["schouten_reading_gap"] = d.scalars.reading_gap;

        PsiSet a, b;
        for (int n = 0; n < 5; ++n) {
            a[std::size_t(n)] = d.scalars.Psi(n);
            b[std::size_t(n)] = d.scalars.PsiP(n);
        }
        const PetrovReport pr = petrov_report(a, b, cfg.spec.signature, petrov_options(cfg, curvature_scale(d)));
        j["petrov_selfdual"] = pr.selfdual.label;
        j["petrov_antiselfdual"] = pr.antiselfdual.label;
        j["petrov"] = {{"selfdual", factor_json(pr.selfdual)}, {"antiselfdual", factor_json(pr.antiselfdual)}};
        if (!pr.selfdual.consistent) warnings.push_back("selfdual Petrov label disagrees with its root data");
        if (!pr.antiselfdual.consistent) warnings.push_back("antiselfdual Petrov label disagrees with its root data");
    }

    if (d.has_cotton) {
        json A = {{"A141", complex_json(d.A[0][3][0].value())}, {"A441", complex_json(d.A[3][3][0].value())}};
        j["cotton"] = A;
        if (cfg.full_cotton) {
            json full = json::object();
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = b + 1; c < 4; ++c)
                        full[index_name("A", {a + 1, b + 1, c + 1})] = complex_json(d.A[a][b][c].value());
            j["cotton_full"] = full;
        }
    } else if (d.has_curvature) {
        warnings.push_back("order " + std::to_string(cfg.order) + " too low for the Cotton tensor (needs 3)");
    }

    const GSReport gs = gs_verdict(d, gs_tolerances(cfg));
    j["integrable"] = gs.flags.integrable.pass;
    json g;
    json conds = {{"integrable", condition_json(gs.flags.integrable)}};
    if (d.has_curvature) {
        conds["ric_degenerate"] = condition_json(gs.flags.ric_degenerate);
        conds["einstein"] = condition_json(gs.flags.einstein);
        conds["alg_special"] = condition_json(gs.flags.alg_special);
    }
    if (d.has_cotton) {
        conds["cotton_degenerate"] = condition_json(gs.flags.cotton_degenerate);
        conds["cotton_cross"] = condition_json(gs.flags.cotton_cross);
        conds["cotton_strong"] = condition_json(gs.flags.cotton_strong);
        g["cotton_identities"] = {{"A112-A134-2A341", complex_json(gs.flags.cotton_identity_m)},
                                  {"A412-A434-2A214", complex_json(gs.flags.cotton_identity_k)}};
    }
    g["conditions"] = conds;
    g["genericity"] = {{"psi2_nonzero", gs.psi2_nonzero},
                       {"psi3_nonzero", gs.psi3_nonzero},
                       {"psi4_nonzero", gs.psi4_nonzero}};
    g["S"] = gs.S ? complex_json(*gs.S) : json(nullptr);
    if (gs.characteristic) {
        const auto& c = *gs.characteristic;
        g["characteristic"] = {{"curvature", complex_json(c.scalar)},
                               {"ricci_mk", complex_json(c.ricci_mk)},
                               {"torsion", {complex_json(c.torsion[0]), complex_json(c.torsion[1])}},
                               {"identity_residual", c.identity_residual}};
    } else {
        g["characteristic"] = nullptr;
    }
    json ids = json::array();
    for (const auto& c : gs.identities)
        ids.push_back({{"name", c.name},
                       {"value", complex_json(c.value)},
                       {"expected", complex_json(c.expected)},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    g["identities"] = ids;
    json imps = json::array();
    for (const auto& im : gs.implications)
        imps.push_back({{"name", im.name}, {"applies", im.applies}, {"holds", im.holds}, {"residual", im.residual}});
    g["implications"] = imps;
    if (gs.sigma_kappa_psi2)
        g["sigma_kappa_psi2"] = {complex_json(gs.sigma_kappa_psi2->first), complex_json(gs.sigma_kappa_psi2->second)};
    g["failures"] = gs.failures;
    for (const auto& f : gs.failures) warnings.push_back("Goldberg-Sachs implication failed: " + f);
    for (const auto& c : gs.identities)
        if (!c.pass) warnings.push_back("identity " + c.name + " off by " + std::to_string(c.residual));
    j["gs"] = g;

    if (cfg.rescale) {
        const Expr U = parse(*cfg.rescale, cfg.spec.parameters);
        CoframeSpec hat = conformal_rescale(cfg.spec, U);
        const FrameData dh = compute_frame_data(hat, p, cfg.order);
        const RescaleCheck rc = rescale_check(d, dh, U);
        j["rescale"] = {{"upsilon", complex_json(rc.upsilon)},
                        {"a141_law", rc.a141_law},
                        {"a441_law", rc.a441_law},
                        {"s_law", rc.s_law < 0 ? json(nullptr) : json(rc.s_law)},
                        {"psi_law", rc.psi_law},
                        {"roots", rc.roots},
                        {"integrable_preserved", rc.integrable_preserved}};
    }
    j["warnings"] = warnings;
    return j;
}

json report_head(const AnalysisConfig& cfg, const char* command) {
    return json{{"tool", "nullframe"},
                {"command", command},
                {"schema_version", 1},
                {"source", cfg.source},
                {"signature", to_string(cfg.spec.signature)},
                {"config", {{"order", cfg.order}, {"tol_scale", cfg.tol_scale}, {"sampling", cfg.sampling}}}};
}

double num_or(const json& j, double fallback = 0.0) { return j.is_number() ? j.get<double>() : fallback; }

json identities_point(const AnalysisConfig& cfg, std::size_t i) {
    const Point& p = cfg.points[i];
    const FrameData d = compute_frame_data(cfg.spec, p, std::max(cfg.order, 4));
    check_coframe_reality(cfg.spec, d);
    const double scale = curvature_scale(d) * (1.0 + d.spin.max_abs());
    json rows = json::array();
    std::size_t flagged = 0;
    double worst = 0.0;
    auto add = [&](const std::vector<Residual>& rs, const char* suite) {
        for (const auto& x : rs) {
            const double tol = residual_tolerance(x.depth) * scale * cfg.tol_scale;
            const double a = std::abs(x.value);
            const bool bad = !(a <= tol);
            flagged += bad;
            worst = std::max(worst, a / scale);
            rows.push_back({{"suite", suite},
                            {"label", x.label},
                            {"lhs", x.lhs},
                            {"residual", complex_json(x.value)},
                            {"abs", a},
                            {"tolerance", tol},
                            {"flagged", bad}});
        }
    };
    add(np_residuals(d), "newman-penrose");
    add(bianchi_residuals(d), "bianchi");
    add(cotton_bianchi_residuals(d), "cotton");
    json j = point_header(p, i);
    j["rows"] = rows;
    j["flagged"] = flagged;
    j["max_scaled_residual"] = worst;
    return j;
}

// Points where an expression leaves its domain stay in the report with an error entry.
std::function<json(std::size_t)> guarded(const AnalysisConfig& cfg, json (*f)(const AnalysisConfig&, std::size_t)) {
    return [&cfg, f](std::size_t i) {
        try {
            return f(cfg, i);
        } catch (const DomainError& e) {
            json j = point_header(cfg.points[i], i);
            j["error"] = e.what();
            j["warnings"] = json::array({std::string("point skipped: ") + e.what()});
            return j;
        } catch (const DecompositionInconsistent& e) {
            json j = point_header(cfg.points[i], i);
            j["error"] = e.what();
            j["warnings"] = json::array({std::string("point skipped: ") + e.what()});
            return j;
        }
    };
}

}  // namespace

json analyze(const AnalysisConfig& cfg) {
    json r = report_head(cfg, "analyze");
    if (cfg.rescale) r["config"]["rescale"] = *cfg.rescale;
    r["points"] = per_point(cfg, guarded(cfg, analyze_point));

    json holds = json::object();
    double kappa_sigma = 0.0, chain = 0.0, rescale = 0.0, gap = 0.0;
    std::size_t warnings = 0, failures = 0;
    for (const auto& pt : r["points"]) {
        warnings += pt["warnings"].size();
        if (pt.contains("error")) continue;
        failures += pt["gs"]["failures"].size();
        gap = std::max(gap, num_or(pt.value("schouten_reading_gap", json())));
        for (const auto& [name, c] : pt["gs"]["conditions"].items()) {
            const bool pass = c["pass"].get<bool>();
            holds[name] = holds.contains(name) ? holds[name].get<bool>() && pass : pass;
        }
        kappa_sigma = std::max(kappa_sigma, pt["gs"]["conditions"]["integrable"]["residual"].get<double>());
        for (const auto& c : pt["gs"]["identities"]) chain = std::max(chain, c["residual"].get<double>());
        if (pt.contains("rescale"))
            for (const char* k : {"a141_law", "a441_law", "s_law", "roots"})
                rescale = std::max(rescale, num_or(pt["rescale"][k]));
    }
    r["summary"] = {{"points", r["points"].size()},
                    {"warnings", warnings},
                    {"gs_failures", failures},
                    {"consistent", failures == 0},
                    {"holds_at_all_points", holds},
                    {"max_residuals",
                     {{"kappa_sigma", kappa_sigma},
                      {"identity_chain", chain},
                      {"rescale", rescale},
                      {"schouten_reading_gap", gap}}}};
    return r;
}

json identities(const AnalysisConfig& cfg) {
    json r = report_head(cfg, "identities");
    r["points"] = per_point(cfg, guarded(cfg, identities_point));
    std::size_t flagged = 0, rows = 0;
    double worst = 0.0;
    for (const auto& pt : r["points"]) {
        if (pt.contains("error")) continue;
        flagged += pt["flagged"].get<std::size_t>();
        rows += pt["rows"].size();
        worst = std::max(worst, pt["max_scaled_residual"].get<double>());
    }
    r["summary"] = {{"points", r["points"].size()}, {"rows", rows}, {"flagged", flagged}, {"max_scaled_residual", worst}};
    return r;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt(const json& z) {
    if (z.is_null()) return "-";
    if (z.is_number()) return fmt(z.get<double>());
    const double re = z["re"].get<double>(), im = z["im"].get<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
    return buf;
}

}  // namespace

std::string render_text(const json& r) {
    std::ostringstream o;
    o << "nullframe " << r["command"].get<std::string>() << "  signature " << r["signature"].get<std::string>()
      << "  order " << r["config"]["order"] << "\n";
    for (const auto& pt : r["points"]) {
        const auto& x = pt["x"];
        o << "\npoint " << pt["index"] << "  (" << fmt(x[0].get<double>()) << ", " << fmt(x[1].get<double>()) << ", "
          << fmt(x[2].get<double>()) << ", " << fmt(x[3].get<double>()) << ")\n";
        if (r["command"] == "identities") {
            for (const auto& row : pt["rows"])
                if (row["flagged"].get<bool>())
                    o << "  FLAGGED " << row["label"].get<std::string>() << "  |residual| " << fmt(row["abs"]) << "\n";
            o << "  " << pt["rows"].size() << " identities, " << pt["flagged"] << " flagged\n";
            continue;
        }
        const auto& u = pt["spin"]["unprimed"];
        o << "  kappa " << fmt(u["kappa"]) << "  sigma " << fmt(u["sigma"]) << "  integrable "
          << (pt["integrable"].get<bool>() ? "yes" : "no") << "\n";
        if (pt.contains("psi")) {
            o << "  Psi :";
            for (int n = 0; n < 5; ++n) o << " " << fmt(pt["psi"]["psi" + std::to_string(n)]);
            o << "\n  Psi':";
            for (int n = 0; n < 5; ++n) o << " " << fmt(pt["psi_primed"]["psi" + std::to_string(n)]);
            o << "\n  Petrov selfdual " << pt["petrov_selfdual"].get<std::string>() << ", antiselfdual "
              << pt["petrov_antiselfdual"].get<std::string>() << "\n";
        }
        if (pt.contains("cotton"))
            o << "  A141 " << fmt(pt["cotton"]["A141"]) << "  A441 " << fmt(pt["cotton"]["A441"]) << "\n";
        const auto& g = pt["gs"];
        o << "  conditions:";
        for (const auto& [name, c] : g["conditions"].items()) o << " " << name << "=" << (c["pass"].get<bool>() ? "y" : "n");
        o << "\n";
        for (const auto& c : g["identities"])
            o << "  " << c["name"].get<std::string>() << "  " << fmt(c["value"]) << "  residual " << fmt(c["residual"])
              << (c["pass"].get<bool>() ? "" : "  FAIL") << "\n";
        for (const auto& im : g["implications"])
            if (im["applies"].get<bool>())
                o << "  " << im["name"].get<std::string>() << (im["holds"].get<bool>() ? " holds" : " FAILS") << "\n";
        if (pt.contains("rescale")) {
            const auto& rs = pt["rescale"];
            o << "  rescale: A141 law " << fmt(rs["a141_law"]) << "  A441 law " << fmt(rs["a441_law"])
              << "  S law " << fmt(rs["s_law"])
              << "  roots " << fmt(rs["roots"]) << "\n";
        }
        for (const auto& w : pt["warnings"]) o << "  warning: " << w.get<std::string>() << "\n";
    }
    o << "\nsummary: " << r["summary"].dump() << "\n";
    return o.str();
}

}  // namespace nf
