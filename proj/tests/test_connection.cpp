#include "doctest.h"

#include "nullframe/catalog.hpp"
#include "nullframe/connection.hpp"
#include "support.hpp"

using nf::cplx;

namespace {

struct Pipe {
    nf::CoframeEval ev;
    nf::StructureCoefficients c;
    nf::ConnectionCoefficients g;
    nf::SpinCoefficients s;
};

Pipe run(const nf::CoframeSpec& spec, nf::Point p, int order = 3) {
    Pipe r;
    r.ev = nf::evaluate_coframe(spec, p, order);
    r.c = nf::structure_coefficients(r.ev);
    r.g = nf::levi_civita(r.c);
    r.s = nf::name_spin_coefficients(r.g);
    return r;
}

}  // namespace

TEST_CASE("flat coframes have vanishing spin coefficients") {
    for (auto name : {"flat-E", "flat-L", "flat-Sc", "flat-Sr"}) {
        auto r = run(nf::catalog_get(name), {0.2, 0.1, -0.3, 0.4});
        CHECK(r.s.max_abs() < 1e-15);
    }
}

TEST_CASE("Levi-Civita is antisymmetric and torsion free") {
    std::mt19937 rng(12);
    for (int t = 0; t < 5; ++t) {
        auto r = run(support::random_coframe(rng, nf::Signature::Complex), support::random_point(rng));
        CHECK(nf::torsion_residual(r.g, r.c) < 1e-9);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) CHECK(nf::max_abs_diff(r.g.gamma[a][b][c], -r.g.gamma[b][a][c]) == 0.0);
        // naming and reassembly are inverse
        auto back = nf::assemble_connection(r.s);
        double worst = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) worst = std::max(worst, nf::max_abs_diff(back.gamma[a][b][c], r.g.gamma[a][b][c]));
        CHECK(worst < 1e-14);
        CHECK(nf::torsion_residual(back, r.c) < 1e-9);
    }
}

TEST_CASE("spin coefficients of the counterexample") {
    // z = x1 + i x2 = 2, w = x3 + i x4 = 1: alpha = z/4 = 1/2
    auto r = run(nf::catalog_get("counterexample"), {2, 0, 1, 0});
    const auto& s = r.s;
    using namespace nf;
    CHECK(std::abs(s(kAlpha) - 0.5) < 1e-12);
    CHECK(std::abs(s(kPi) + 1.0) < 1e-12);
    CHECK(std::abs(s.primed(kBeta) - 0.5) < 1e-12);
    CHECK(std::abs(s.primed(kTau) + 1.0) < 1e-12);
    CHECK(std::abs(s(kKappa)) < 1e-12);
    CHECK(std::abs(s(kSigma)) < 1e-12);
    // Euclidean partners
    CHECK(std::abs(s(kBeta) + std::conj(s(kAlpha))) < 1e-12);
    CHECK(std::abs(s(kTau) - std::conj(s(kPi))) < 1e-12);
    CHECK(std::abs(s.primed(kAlpha) + std::conj(s.primed(kBeta))) < 1e-12);
    CHECK(std::abs(s.primed(kPi) - std::conj(s.primed(kTau))) < 1e-12);
    for (Letter l : {kGamma, kEpsilon, kLambda, kMu, kNu, kRho, kSigma, kKappa}) {
        CHECK(std::abs(s(l)) < 1e-12);
        CHECK(std::abs(s.primed(l)) < 1e-12);
    }
    CHECK(nf::is_integrable(s));

    // generic point: alpha = z/4
    nf::Point p{0.3, -0.1, 0.2, 0.5};
    auto q = run(nf::catalog_get("counterexample"), p);
    const cplx z(p[0], p[1]);
    CHECK(std::abs(q.s(kAlpha) - z / 4.0) < 1e-12);
    CHECK(std::abs(q.s(kPi) + z / 2.0) < 1e-12);
    CHECK(std::abs(q.s.primed(kBeta) - z / 4.0) < 1e-12);
    CHECK(std::abs(q.s.primed(kTau) + z / 2.0) < 1e-12);
}

TEST_CASE("conjugation tables of the spin coefficients") {
    using namespace nf;
    std::mt19937 rng(13);
    auto cj = [](cplx v) { return std::conj(v); };
    for (int t = 0; t < 3; ++t) {
        auto L = run(support::random_coframe(rng, Signature::L), support::random_point(rng));
        for (int l = 0; l < 12; ++l) CHECK(std::abs(cj(L.s(Letter(l))) - L.s.primed(Letter(l))) < 1e-10);

        // (letter, partner, sign): conj(letter) = sign * partner
        struct Rel {
            Letter a, b;
            double e, sc;
        };
        const Rel rels[] = {{kAlpha, kBeta, -1, -1},  {kBeta, kAlpha, -1, -1}, {kGamma, kEpsilon, -1, 1},
                            {kEpsilon, kGamma, -1, 1}, {kLambda, kSigma, 1, -1}, {kMu, kRho, 1, -1},
                            {kNu, kKappa, 1, 1},       {kPi, kTau, 1, 1},       {kRho, kMu, 1, -1},
                            {kSigma, kLambda, 1, -1},  {kTau, kPi, 1, 1},       {kKappa, kNu, 1, 1}};
        auto E = run(support::random_coframe(rng, Signature::E), support::random_point(rng));
        auto S = run(support::random_coframe(rng, Signature::Sc), support::random_point(rng));
        for (const auto& r : rels) {
            CHECK(std::abs(cj(E.s(r.a)) - r.e * E.s(r.b)) < 1e-10);
            CHECK(std::abs(cj(E.s.primed(r.a)) - r.e * E.s.primed(r.b)) < 1e-10);
            CHECK(std::abs(cj(S.s(r.a)) - r.sc * S.s(r.b)) < 1e-10);
            CHECK(std::abs(cj(S.s.primed(r.a)) - r.sc * S.s.primed(r.b)) < 1e-10);
        }
        auto R = run(support::random_coframe(rng, Signature::Sr), support::random_point(rng));
        for (int l = 0; l < 12; ++l) {
            CHECK(std::abs(R.s(Letter(l)).imag()) < 1e-12);
            CHECK(std::abs(R.s.primed(Letter(l)).imag()) < 1e-12);
        }
    }
}

TEST_CASE("canonical Weyl form") {
    using namespace nf;
    auto flat = run(catalog_get("flat-E"), {0, 0, 0, 0});
    auto wf = canonical_weyl_form(flat.s);
    for (auto& b : wf.B) CHECK(std::abs(b.value()) == 0.0);

    // tau = conj(pi) = -1 at z = 2, so B = (2 tau, 2 pi, 0, 0) = (-2, -2, 0, 0)
    auto ce = run(catalog_get("counterexample"), {2, 0, 1, 0});
    auto B = canonical_weyl_form(ce.s);
    CHECK(std::abs(B.B[0].value() + 2.0) < 1e-12);
    CHECK(std::abs(B.B[1].value() + 2.0) < 1e-12);
    CHECK(std::abs(B.B[2].value()) < 1e-12);
    CHECK(std::abs(B.B[3].value()) < 1e-12);

    std::mt19937 rng(14);
    auto gen = run(support::random_coframe(rng, Signature::E), support::random_point(rng));
    CHECK_THROWS_AS(canonical_weyl_form(gen.s), NotIntegrable);
    CHECK_THROWS_AS(characteristic_derivatives(gen.s), NotIntegrable);
}

TEST_CASE("Weyl connection: torsion free, nabla g = -B g, preserves N") {
    using namespace nf;
    nf::Point p{0.3, -0.1, 0.2, 0.5};
    auto ce = run(catalog_get("counterexample"), p);
    auto wf = canonical_weyl_form(ce.s);
    auto W = weyl_connection(ce.g, wf);
    CHECK(torsion_residual(W, ce.c) < 1e-10);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                // (nabla_c g)_ab = -W Gamma_bac - W Gamma_abc = -B_c g_ab
                cplx ng = -W.value(b, a, c) - W.value(a, b, c);
                CHECK(std::abs(ng + wf.B[c].value() * gab(a, b)) < 1e-12);
            }
    for (int c = 0; c < 4; ++c) {
        CHECK(std::abs(W.value(0, 0, c)) < 1e-10);
        CHECK(std::abs(W.value(3, 3, c)) < 1e-10);
        CHECK(std::abs(W.value(0, 3, c)) < 1e-10);
    }
    auto zero = weyl_connection(ce.g, WeylForm{{Jet(2), Jet(2), Jet(2), Jet(2)}, {true, true, true, true}});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) CHECK(zero.value(a, b, c) == ce.g.value(a, b, c));
}

TEST_CASE("characteristic derivatives equal the Weyl restriction for any completion") {
    using namespace nf;
    std::mt19937 rng(15);
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<std::pair<CoframeSpec, Point>> cases{{catalog_get("counterexample"), {0.3, -0.1, 0.2, 0.5}},
                                                     {catalog_get("pp-special"), {0.4, 0.2, -0.3, 0.1}},
                                                     {catalog_get("counterexample", {{"f", "x1*x1 - x2*x2 + i*2*x1*x2"}}),
                                                      {0.1, 0.7, -0.2, 0.3}}};
    for (auto& [spec, p] : cases) {
        auto r = run(spec, p);
        auto direct = characteristic_derivatives(r.s);
        auto canon = restrict_weyl(weyl_connection(r.g, canonical_weyl_form(r.s)));
        auto w1 = restrict_weyl(weyl_connection(r.g, weyl_form(r.s, cplx(u(rng), u(rng)), cplx(u(rng), u(rng)))));
        auto w2 = restrict_weyl(weyl_connection(r.g, weyl_form(r.s, cplx(u(rng), u(rng)), cplx(u(rng), u(rng)))));
        for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B)
                for (int C = 0; C < 2; ++C) {
                    CHECK(max_abs_diff(direct.at(A, B, C), canon.at(A, B, C)) < 1e-10);
                    CHECK(max_abs_diff(w1.at(A, B, C), w2.at(A, B, C)) < 1e-12);
                    CHECK(max_abs_diff(direct.at(A, B, C), w1.at(A, B, C)) < 1e-10);
                }
    }
}
