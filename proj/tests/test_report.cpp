#include "doctest.h"

#include "nullframe/catalog.hpp"
#include "nullframe/report.hpp"
#include "support.hpp"

#include <cmath>

using nlohmann::json;

namespace {

nf::AnalysisConfig catalog_config(const std::string& name, std::vector<nf::Point> pts, nf::CatalogParams params = {}) {
    nf::AnalysisConfig c;
    c.spec = nf::catalog_get(name, params);
    c.source = {{"kind", "catalog"}, {"name", name}};
    c.points = std::move(pts);
    c.sampling = {{"kind", "points"}};
    return c;
}

nf::cplx as_complex(const json& j) { return {j["re"].get<double>(), j["im"].get<double>()}; }

}  // namespace

TEST_CASE("analyze: counterexample at z = 1, w = 2") {
    const json r = nf::analyze(catalog_config("counterexample", {{1, 0, 2, 0}}));
    const json& p = r["points"][0];
    // Psi1 = conj(e^{-wz})/4
    CHECK(std::abs(as_complex(p["psi"]["psi1"]) - 0.25 * std::exp(-2.0)) < 1e-12);
    CHECK(std::abs(as_complex(p["psi"]["psi3"]) - 0.25 * std::exp(-2.0)) < 1e-12);
    CHECK(p["petrov_selfdual"] == "G");
    CHECK(p["petrov_antiselfdual"] == "0");
    CHECK(p["integrable"] == true);
    CHECK(p["gs"]["identities"].size() == 6);
    CHECK(p["warnings"].empty());
    CHECK(r["summary"]["consistent"] == true);
    CHECK(r["summary"]["holds_at_all_points"]["integrable"] == true);
    CHECK(r["summary"]["holds_at_all_points"]["alg_special"] == false);
}

TEST_CASE("analyze: flat coframe gives an all-zero report") {
    const json r = nf::analyze(catalog_config("flat-E", {{0.1, 0.2, 0.3, 0.4}}));
    const json& p = r["points"][0];
    for (const auto& [k, v] : p["spin"]["unprimed"].items()) CHECK(std::abs(as_complex(v)) == 0.0);
    for (const auto& [k, v] : p["psi"].items()) CHECK(std::abs(as_complex(v)) == 0.0);
    CHECK(p["petrov_selfdual"] == "0");
    CHECK(p["petrov_antiselfdual"] == "0");
}

TEST_CASE("analyze: rescaling block and determinism") {
    auto cfg = catalog_config("counterexample", nf::sample_points({-1, -1, -1, -1}, {1, 1, 1, 1}, 8, 3));
    cfg.rescale = "x1";
    cfg.threads = 4;
    const json a = nf::analyze(cfg);
    cfg.threads = 1;
    const json b = nf::analyze(cfg);
    CHECK(a.dump() == b.dump());
    for (const auto& p : a["points"]) {
        CHECK(p["rescale"]["a141_law"].get<double>() < 1e-7);
        CHECK(p["rescale"]["a441_law"].get<double>() < 1e-7);
        CHECK(p["rescale"]["s_law"].get<double>() < 1e-7);
        CHECK(p["rescale"]["roots"].get<double>() < 1e-8);
    }
}

TEST_CASE("analyze: low orders skip what they cannot compute") {
    auto cfg = catalog_config("counterexample", {{0.3, -0.1, 0.2, 0.5}});
    cfg.order = 1;
    json r = nf::analyze(cfg);
    CHECK_FALSE(r["points"][0].contains("psi"));
    CHECK(r["points"][0]["integrable"] == true);
    cfg.order = 2;
    r = nf::analyze(cfg);
    CHECK(r["points"][0].contains("psi"));
    CHECK_FALSE(r["points"][0].contains("cotton"));
    CHECK_FALSE(r["points"][0]["warnings"].empty());
}

TEST_CASE("analyze: pipeline errors propagate") {
    auto cfg = catalog_config("flat-Sr", {{0, 0, 0, 0}});
    cfg.spec.signature = nf::Signature::E;  // real coframe is not Euclidean-adapted
    CHECK_THROWS_AS(nf::analyze(cfg), nf::RealityViolated);
    auto deg = catalog_config("flat-Sr", {{0, 0, 0, 0}});
    deg.spec.theta[1] = deg.spec.theta[0];
    CHECK_THROWS_AS(nf::analyze(deg), nf::DegenerateCoframe);
    auto dom = catalog_config("conformally-flat", {{0, 0, 0, 0}, {1, 0, 0, 0}}, {{"upsilon", "log(x1)"}});
    const json r = nf::analyze(dom);
    CHECK(r["points"][0].contains("error"));
    CHECK_FALSE(r["points"][1].contains("error"));
}

TEST_CASE("identities: 64 rows per point, none flagged on catalog metrics") {
    for (const char* name : {"counterexample", "pp-special", "flat-L"}) {
        const json r = nf::identities(catalog_config(name, {{0.3, -0.1, 0.2, 0.5}, {-0.4, 0.2, 0.1, 0.3}}));
        CHECK(r["summary"]["rows"] == 128);
        CHECK(r["summary"]["flagged"] == 0);
    }
    const json r = nf::identities(catalog_config("conformally-flat", {{0.3, -0.1, 0.2, 0.5}}, {{"upsilon", "x1*x3"}}));
    CHECK(r["summary"]["flagged"] == 0);
}

TEST_CASE("identities flag a corrupted dual frame") {
    std::mt19937 rng(5);
    nf::FrameData d = nf::compute_frame_data(support::random_coframe(rng, nf::Signature::E), support::random_point(rng));
    auto count = [](const nf::FrameData& f) {
        double scale = 1.0;
        for (int n = 0; n < 5; ++n) scale = std::max({scale, std::abs(f.scalars.Psi(n)), std::abs(f.scalars.PsiP(n))});
        scale *= 1.0 + f.spin.max_abs();
        int bad = 0;
        for (const auto& list : {nf::np_residuals(f), nf::bianchi_residuals(f), nf::cotton_bianchi_residuals(f)})
            for (const auto& r : list) bad += std::abs(r.value) > nf::residual_tolerance(r.depth) * scale;
        return bad;
    };
    CHECK(count(d) == 0);
    // the derivative operators now use a wrong dual vector e_1
    d.ev.frame[0][1] += nf::Jet(d.ev.frame[0][1].order(), 0.05);
    CHECK(count(d) > 10);
}
