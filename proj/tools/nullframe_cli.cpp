// nullframe: run the null-frame pipeline on a coframe file or catalog entry.
//
// Exit codes: 0 ok (warnings are reported per point), 2 parse or configuration
// error, 3 degenerate coframe, 4 reality conditions violated.

#include "nullframe/catalog.hpp"
#include "nullframe/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr unsigned kDefaultSeed = 20240607;

struct Options {
    std::string metric, catalog;
    std::vector<std::string> params;
    std::vector<std::string> points;
    std::vector<double> box;
    int n = 20;
    int order = 4;
    double tol_scale = 1.0;
    std::string rescale;
    bool json = false, text = false, full_cotton = false;
    unsigned seed = kDefaultSeed;
    int threads = 0;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nf::Point parse_point(const std::string& s) {
    std::stringstream ss(s);
    std::string tok;
    std::vector<double> v;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ConfigError("bad coordinate '" + tok + "' in point '" + s + "'");
        }
    }
    if (v.size() != 4) throw ConfigError("point '" + s + "' needs four comma-separated coordinates");
    for (double x : v)
        if (!std::isfinite(x)) throw ConfigError("point '" + s + "' is not finite");
    return {v[0], v[1], v[2], v[3]};
}

nf::AnalysisConfig build_config(const Options& o) {
    nf::AnalysisConfig cfg;
    if (o.metric.empty() == o.catalog.empty()) throw ConfigError("give exactly one of --metric or --catalog");
    if (!o.metric.empty()) {
        if (!o.params.empty()) throw ConfigError("--param applies to catalog entries; put parameters in the coframe file");
        std::ifstream in(o.metric);
        if (!in) throw ConfigError("cannot read coframe file '" + o.metric + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cfg.spec = nf::load_coframe_json(buf.str());
        cfg.source = {{"kind", "file"}, {"path", o.metric}};
    } else {
        std::string name = o.catalog;
        if (name.rfind("catalog:", 0) == 0) name = name.substr(8);
        nf::CatalogParams params;
        for (const auto& kv : o.params) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects key=value, got '" + kv + "'");
            params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        cfg.spec = nf::catalog_get(name, params);
        nlohmann::json jp = nlohmann::json::object();
        for (const auto& [k, v] : params) jp[k] = v;
        cfg.source = {{"kind", "catalog"}, {"name", name}, {"params", jp}};
    }

    if (!o.points.empty() && !o.box.empty()) throw ConfigError("give either --points or --box, not both");
    if (!o.points.empty()) {
        for (const auto& s : o.points) cfg.points.push_back(parse_point(s));
        cfg.sampling = {{"kind", "points"}};
    } else {
        nf::Point lo{-1, -1, -1, -1}, hi{1, 1, 1, 1};
        if (!o.box.empty()) {
            if (o.box.size() != 8) throw ConfigError("--box expects 8 numbers: lo1 lo2 lo3 lo4 hi1 hi2 hi3 hi4");
            for (int k = 0; k < 4; ++k) {
                lo[std::size_t(k)] = o.box[std::size_t(k)];
                hi[std::size_t(k)] = o.box[std::size_t(k + 4)];
                if (!(lo[std::size_t(k)] <= hi[std::size_t(k)])) throw ConfigError("--box: lower corner above upper corner");
            }
        }
        if (o.n < 1) throw ConfigError("--n must be positive");
        cfg.points = nf::sample_points(lo, hi, o.n, o.seed);
        cfg.sampling = {{"kind", "box"},
                        {"lo", {lo[0], lo[1], lo[2], lo[3]}},
                        {"hi", {hi[0], hi[1], hi[2], hi[3]}},
                        {"n", o.n},
                        {"seed", o.seed}};
    }
    if (o.order < 1 || o.order > 6) throw ConfigError("--order must be in [1, 6]");
    if (!(o.tol_scale > 0)) throw ConfigError("--tol-scale must be positive");
    cfg.order = o.order;
    cfg.tol_scale = o.tol_scale;
    cfg.full_cotton = o.full_cotton;
    cfg.threads = o.threads;
    if (!o.rescale.empty()) {
        nf::parse(o.rescale, cfg.spec.parameters);  // fail early on a bad expression
        cfg.rescale = o.rescale;
    }
    return cfg;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--metric", o.metric, "coframe JSON file");
    sub->add_option("--catalog", o.catalog, "catalog entry name");
    sub->add_option("--param", o.params, "catalog parameter key=value (repeatable)");
    sub->add_option("--points", o.points, "evaluation point x1,x2,x3,x4 (repeatable)");
    sub->add_option("--box", o.box, "sampling box lo1 lo2 lo3 lo4 hi1 hi2 hi3 hi4")->expected(8);
    sub->add_option("--n", o.n, "number of quasi-random points in the box")->capture_default_str();
    sub->add_option("--order", o.order, "jet order of the coframe (1..6; 4 for the full pipeline)")
        ->capture_default_str();
    sub->add_option("--tol-scale", o.tol_scale, "multiply all verdict tolerances")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed of the sampling shift")->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)")->capture_default_str();
    auto* fmt = sub->add_option_group("format");
    fmt->add_flag("--json", o.json, "JSON report (default)");
    fmt->add_flag("--text", o.text, "human-readable report");
    fmt->require_option(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nullframe: Newman-Penrose data, Petrov types and Goldberg-Sachs checks for null coframes"};
    app.require_subcommand(1);
    Options o;
    auto* analyze = app.add_subcommand("analyze", "spin coefficients, curvature, Petrov types and verdicts per point");
    add_common(analyze, o);
    analyze->add_option("--rescale", o.rescale, "conformal factor Upsilon: also check the rescaling laws");
    analyze->add_flag("--full-cotton", o.full_cotton, "report every Cotton component");
    auto* ident = app.add_subcommand("identities", "residuals of the 36 + 20 + 8 identities per point");
    add_common(ident, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const nf::AnalysisConfig cfg = build_config(o);
        const nlohmann::json report = analyze->parsed() ? nf::analyze(cfg) : nf::identities(cfg);
        if (o.text)
            std::cout << nf::render_text(report);
        else
            std::cout << report.dump(2) << "\n";
        return 0;
    } catch (const nf::DegenerateCoframe& e) {
        std::cerr << "degenerate coframe: " << e.what() << "\n";
        return 3;
    } catch (const nf::RealityViolated& e) {
        std::cerr << "reality violated: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nf::SpecError& e) {
        std::cerr << "coframe error: " << e.what() << "\n";
        return 2;
    } catch (const nf::CatalogError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const nf::ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const nf::UnknownIdentifier& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
