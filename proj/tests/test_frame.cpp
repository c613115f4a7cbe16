#include "doctest.h"

#include "nullframe/catalog.hpp"
#include "nullframe/frame.hpp"
#include "oracles.hpp"
#include "support.hpp"

using nf::cplx;

TEST_CASE("constant coframe evaluates to identity") {
    auto ev = nf::evaluate_coframe(nf::catalog_get("flat-Sr"), {0.1, 0.2, 0.3, 0.4}, 2);
    auto t = ev.theta_value(), e = ev.frame_value();
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) {
            CHECK(t[a][mu] == cplx(a == mu ? 1.0 : 0.0));
            CHECK(e[a][mu] == cplx(a == mu ? 1.0 : 0.0));
        }
    auto g = nf::metric_components(ev);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) CHECK(g[mu][nu] == cplx(nf::gab(mu, nu)));
    auto c = nf::structure_coefficients(ev);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int d = 0; d < 4; ++d) CHECK(c.c[a][b][d].is_constant() == true);
}

TEST_CASE("counterexample coframe at the origin reduces to flat components") {
    auto ev = nf::evaluate_coframe(nf::catalog_get("counterexample"), {0, 0, 0, 0}, 3);
    auto t = ev.theta_value();
    CHECK(std::abs(t[2][0] - 1.0) < 1e-15);
    CHECK(std::abs(t[2][1] - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(t[3][1] - cplx(0, -1)) < 1e-15);
}

TEST_CASE("degenerate coframe is rejected") {
    nf::A44<std::string> comps{{{"1", "x2", "0", "0"}, {"1", "x2", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}};
    CHECK_THROWS_AS(nf::evaluate_coframe(nf::make_spec(comps, nf::Signature::Complex), {0.2, 0.3, 0, 0}, 2),
                    nf::DegenerateCoframe);
}

TEST_CASE("dual frame inverts the coframe") {
    std::mt19937 rng(1);
    for (auto tag : {nf::Signature::Complex, nf::Signature::E, nf::Signature::L}) {
        auto spec = support::random_coframe(rng, tag);
        auto ev = nf::evaluate_coframe(spec, support::random_point(rng), 3);
        // full jet identity theta^b_mu e_a^mu = delta
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                nf::Jet s(3);
                for (int mu = 0; mu < 4; ++mu) s += ev.theta[b][mu] * ev.frame[a][mu];
                CHECK(nf::max_abs_diff(s, nf::Jet(3, a == b ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("counterexample metric is real positive definite") {
    auto spec = nf::catalog_get("counterexample");
    std::mt19937 rng(2);
    for (int t = 0; t < 5; ++t) {
        auto ev = nf::evaluate_coframe(spec, support::random_point(rng), 1);
        auto g = nf::metric_components(ev);
        // Sylvester: leading principal minors positive
        for (int n = 1; n <= 4; ++n) {
            nf::CMat4 m{};
            for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CHECK(std::abs(g[i][j].imag()) < 1e-12);
                    CHECK(std::abs(g[i][j] - g[j][i]) < 1e-12);
                    m[i][j] = g[i][j];
                }
            CHECK(nf::determinant(m).real() > 0.0);
        }
    }
}

TEST_CASE("rescaled coframe scales the metric by e^(2 upsilon)") {
    std::mt19937 rng(3);
    auto spec = support::random_coframe(rng, nf::Signature::E);
    auto scaled = spec;
    auto ups = nf::parse("x1*x3 - 0.2*x2");
    for (auto& row : scaled.theta)
        for (auto& c : row) c = nf::make_binary(nf::Op::Mul, nf::make_func(nf::Fn::Exp, ups), c);
    nf::Point p{0.1, -0.3, 0.25, 0.4};
    auto g = nf::metric_components(nf::evaluate_coframe(spec, p, 1));
    auto h = nf::metric_components(nf::evaluate_coframe(scaled, p, 1));
    const double f = std::exp(2 * (p[0] * p[2] - 0.2 * p[1]));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(h[i][j] - f * g[i][j]) < 1e-12);
}

TEST_CASE("structure coefficients reconstruct the exterior derivative") {
    std::mt19937 rng(4);
    for (int t = 0; t < 4; ++t) {
        auto spec = support::random_coframe(rng, nf::Signature::Complex);
        auto p = support::random_point(rng);
        auto ev = nf::evaluate_coframe(spec, p, 2);
        auto c = nf::structure_coefficients(ev);
        auto d = nf::exterior_derivative(ev);
        // d theta^a_{mu nu} = -c^a_bc theta^b_mu theta^c_nu (as jets)
        double worst = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    nf::Jet s(1);
                    for (int b = 0; b < 4; ++b)
                        for (int cc = 0; cc < 4; ++cc) s -= c.c[a][b][cc] * ev.theta[b][mu] * ev.theta[cc][nu];
                    worst = std::max(worst, nf::max_abs_diff(s, d[a][mu][nu]));
                }
        CHECK(worst < 1e-10);

        // against finite differences of the coframe values
        auto theta_at = [&](nf::Point x) { return nf::evaluate_coframe(spec, x, 1).theta_value(); };
        const double h = 1e-4;
        auto e = ev.frame_value();
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int cc = 0; cc < 4; ++cc) {
                    cplx ref = 0.0;
                    for (int mu = 0; mu < 4; ++mu)
                        for (int nu = 0; nu < 4; ++nu) {
                            auto xp = p, xm = p, yp = p, ym = p;
                            xp[mu] += h;
                            xm[mu] -= h;
                            yp[nu] += h;
                            ym[nu] -= h;
                            const cplx dmu = (theta_at(xp)[a][nu] - theta_at(xm)[a][nu]) / (2 * h);
                            const cplx dnu = (theta_at(yp)[a][mu] - theta_at(ym)[a][mu]) / (2 * h);
                            ref -= e[b][mu] * e[cc][nu] * (dmu - dnu);
                        }
                    CHECK(std::abs(c.value(a, b, cc) - ref) < 1e-8);
                }
    }
}

TEST_CASE("reality checks") {
    nf::Point p{0.3, -0.1, 0.2, 0.5};
    auto ce = nf::evaluate_coframe(nf::catalog_get("counterexample"), p, 1);
    CHECK(nf::check_reality(ce, nf::Signature::E).pass);
    auto flat = nf::evaluate_coframe(nf::catalog_get("flat-Sr"), p, 1);
    CHECK(nf::check_reality(flat, nf::Signature::Sr).pass);
    CHECK_FALSE(nf::check_reality(flat, nf::Signature::E).pass);
    std::mt19937 rng(9);
    for (auto tag : {nf::Signature::E, nf::Signature::L, nf::Signature::Sc, nf::Signature::Sr}) {
        auto ev = nf::evaluate_coframe(support::random_coframe(rng, tag), support::random_point(rng), 1);
        CHECK(nf::check_reality(ev, tag).pass);
    }
    for (auto name : {"flat-E", "flat-L", "flat-Sc", "flat-Sr"}) {
        auto spec = nf::catalog_get(name);
        CHECK(nf::check_reality(nf::evaluate_coframe(spec, p, 1), spec.signature).pass);
    }
}

TEST_CASE("coframe JSON round trip") {
    auto spec = nf::catalog_get("counterexample");
    auto back = nf::load_coframe_json(nf::coframe_to_json(spec));
    CHECK(back.signature == nf::Signature::E);
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) CHECK(nf::structurally_equal(back.theta[a][mu], spec.theta[a][mu]));
    CHECK_THROWS_AS(nf::load_coframe_json("{\"coframe\": {}}"), nf::SpecError);
    CHECK_THROWS_AS(nf::load_coframe_json("not json"), nf::SpecError);
    auto with_param = nf::load_coframe_json(
        R"({"signature":"S_r","parameters":{"a":2},"coframe":{"M":["a","0","0","0"],"P":["0","1","0","0"],"N":["0","0","1","0"],"K":["0","0","0","1"]}})");
    CHECK(nf::evaluate_coframe(with_param, {0, 0, 0, 0}, 1).theta_value()[0][0] == cplx(2.0));
}
