// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "nullframe/catalog.hpp"
#include "nullframe/connection.hpp"
#include "nullframe/curvature.hpp"
#include "nullframe/gs.hpp"
#include "nullframe/petrov.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using nf::cplx;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    // records a named maximum and fails when it is not below the bound
    void below(const std::string& what, double value, double bound) {
        if (!(value < bound)) pass = false;
        detail << "  " << what << " " << value << " (< " << bound << ")";
    }
    void require(const std::string& what, bool ok) {
        if (!ok) {
            pass = false;
            detail << "  FAILED: " << what;
        }
    }
};

const nf::Point kLo{-1, -1, -1, -1}, kHi{1, 1, 1, 1};
constexpr unsigned kSeed = 20240607;

nf::PsiSet psi_of(const nf::CurvatureScalars& k) { return {k.Psi(0), k.Psi(1), k.Psi(2), k.Psi(3), k.Psi(4)}; }
nf::PsiSet psi_primed_of(const nf::CurvatureScalars& k) {
    return {k.PsiP(0), k.PsiP(1), k.PsiP(2), k.PsiP(3), k.PsiP(4)};
}

double curvature_scale(const nf::CurvatureScalars& k) {
    double m = 1.0;
    for (int n = 0; n < 5; ++n) m = std::max({m, std::abs(k.Psi(n)), std::abs(k.PsiP(n))});
    return m;
}

// 1. f = wz: spin coefficients, Weyl scalars and Petrov types against closed forms
Outcome counterexample() {
    Outcome o;
    using namespace nf;
    const auto spec = catalog_get("counterexample");
    double ks = 0, letters = 0, psi = 0;
    int typed = 0;
    for (const auto& p : sample_points(kLo, kHi, 10, kSeed)) {
        const auto d = compute_frame_data(spec, p);
        const cplx z(p[0], p[1]), w(p[2], p[3]);
        const cplx fw = z, fwz = 1.0, f = w * z;
        const auto& s = d.spin;
        ks = std::max({ks, std::abs(s(kKappa)), std::abs(s(kSigma))});
        for (cplx v : {s(kAlpha), -0.5 * s(kPi), s.primed(kBeta), -0.5 * s.primed(kTau)})
            letters = std::max(letters, std::abs(v - 0.25 * fw));
        const cplx psi3 = 0.25 * std::exp(-f) * fwz;
        const auto& k = d.scalars;
        psi = std::max({psi, std::abs(k.Psi(3) - psi3), std::abs(k.Psi(1) - std::conj(psi3)), std::abs(k.Psi(0)),
                        std::abs(k.Psi(2)), std::abs(k.Psi(4))});
        for (int n = 0; n < 5; ++n) psi = std::max(psi, std::abs(k.PsiP(n)));
        const auto pr = petrov_report(psi_of(k), psi_primed_of(k), Signature::E);
        typed += pr.selfdual.label == "G" && pr.antiselfdual.label == "0";
    }
    o.below("|kappa|,|sigma|", ks, 1e-10);
    o.below("alpha chain", letters, 1e-9);
    o.below("Psi", psi, 1e-8);
    o.require("types G/0 at all 10 points", typed == 10);
    o.detail << "  types G/0 " << typed << "/10";
    return o;
}

// 2. NP equations, second Bianchi identities and the compact Cotton forms
Outcome identity_suites() {
    Outcome o;
    std::vector<std::pair<std::string, nf::CoframeSpec>> specs{
        {"counterexample", nf::catalog_get("counterexample")},
        {"conformally-flat", nf::catalog_get("conformally-flat", {{"upsilon", "x1*x3"}})}};
    std::mt19937 rng(kSeed);
    for (int i = 0; i < 5; ++i)
        specs.push_back({"random" + std::to_string(i), support::random_coframe(rng, nf::Signature::Complex, 2)});
    const auto points = nf::sample_points({-0.5, -0.5, -0.5, -0.5}, {0.5, 0.5, 0.5, 0.5}, 10, kSeed);
    double worst = 0.0;
    std::string where;
    bool counts = true;
    for (const auto& [name, spec] : specs)
        for (const auto& p : points) {
            const auto d = nf::compute_frame_data(spec, p);
            const auto np = nf::np_residuals(d), bi = nf::bianchi_residuals(d), co = nf::cotton_bianchi_residuals(d);
            counts = counts && np.size() == 36 && bi.size() == 20 && co.size() == 8;
            for (const auto& list : {np, bi, co})
                for (const auto& r : list)
                    if (std::abs(r.value) > worst) {
                        worst = std::abs(r.value);
                        where = name + " " + r.label;
                    }
        }
    o.require("36 + 20 + 8 residuals per point", counts);
    o.below("max |residual|", worst, 1e-7);
    o.detail << " at " << where << ", " << specs.size() * points.size() << " points";
    return o;
}

// 3. the chain S = -10 Psi1^2, R(m,k) = 4 Psi1 Id, T = 0, -16 Psi1^2, 16 Psi1^2
Outcome identity_chain() {
    Outcome o;
    std::vector<std::pair<nf::CoframeSpec, nf::Point>> samples;
    for (const auto& p : nf::sample_points(kLo, kHi, 10, kSeed)) samples.push_back({nf::catalog_get("counterexample"), p});
    std::mt19937 rng(kSeed + 3);
    for (int i = 0; i < 10; ++i) {
        auto spec = support::integrable_sample(rng, i % 2 == 1);
        samples.push_back({spec, support::random_point(rng)});
    }
    double s_rel = 0, curv = 0, tors = 0, second = 0, herm = 0;
    int integrable = 0;
    for (const auto& [spec, p] : samples) {
        const auto d = nf::compute_frame_data(spec, p);
        if (!nf::is_integrable(d.spin)) continue;
        ++integrable;
        const cplx psi1 = d.scalars.Psi(1);
        const auto r = nf::gs_verdict(d);
        o.require("S defined", r.S.has_value());
        if (r.S) s_rel = std::max(s_rel, std::abs(*r.S + 10.0 * psi1 * psi1) / std::abs(10.0 * psi1 * psi1));
        const auto ch = nf::characteristic_curvature(d);
        for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B)
                curv = std::max(curv, std::abs(ch.R[A][B] - (A == B ? 4.0 * psi1 : 0.0)));
        tors = std::max({tors, std::abs(ch.torsion[0]), std::abs(ch.torsion[1])});
        second = std::max(second, std::abs(nf::second_curvature_identity(d) + 16.0 * psi1 * psi1));
        herm = std::max(herm, std::abs(nf::hermitian_weyl_identity(d) - 16.0 * psi1 * psi1));
    }
    o.require("all samples integrable", integrable == int(samples.size()));
    o.below("S+10Psi1^2 rel", s_rel, 1e-7);
    o.below("R-4Psi1 Id", curv, 1e-8);
    o.below("T", tors, 1e-8);
    o.below("second+16Psi1^2", second, 1e-7);
    o.below("hermitian-16Psi1^2", herm, 1e-6);
    o.detail << "  samples " << integrable;
    return o;
}

// 4. counterexample rescaled by Upsilon = x1
Outcome conformal_laws() {
    Outcome o;
    const auto base = nf::catalog_get("counterexample");
    const auto U = nf::parse("x1");
    const auto hat = nf::conformal_rescale(base, U);
    double a_law = 0, s_law = 0, roots = 0;
    for (const auto& p : nf::sample_points(kLo, kHi, 10, kSeed)) {
        const auto c = nf::rescale_check(nf::compute_frame_data(base, p), nf::compute_frame_data(hat, p), U);
        a_law = std::max({a_law, c.a141_law, c.a441_law});
        o.require("S defined on both sides", c.s_law >= 0.0);
        s_law = std::max(s_law, c.s_law);
        roots = std::max(roots, c.roots);
    }
    o.below("A laws", a_law, 1e-7);
    o.below("S law rel", s_law, 1e-7);
    o.below("root chordal", roots, 1e-8);
    return o;
}

// Psi of lambda * prod (b_i z - a_i w) for roots (a_i : b_i)
nf::PsiSet psi_with_roots(const std::vector<std::pair<cplx, cplx>>& roots, cplx lambda) {
    std::vector<cplx> c{lambda};  // c[k] multiplies z^k w^(deg-k)
    for (const auto& [a, b] : roots) {
        std::vector<cplx> n(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            n[k + 1] += c[k] * b;
            n[k] += -c[k] * a;
        }
        c = n;
    }
    return {c[0], c[1] / 4.0, c[2] / 6.0, -c[3] / 4.0, c[4]};
}

// 5. partition labels of synthetic quartics, vanishing leading Psi, reality pairings
Outcome petrov_classifier() {
    Outcome o;
    std::mt19937 rng(kSeed);
    std::normal_distribution<double> g;
    const std::vector<std::vector<int>> shapes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    int right = 0, total = 0;
    while (total < 200) {
        const auto& shape = shapes[std::size_t(total) % shapes.size()];
        std::vector<nf::SpherePoint> distinct;
        std::vector<std::pair<cplx, cplx>> pts;
        while (distinct.size() < shape.size()) {
            // one in ten roots at infinity
            const auto r = rng() % 10 == 0 ? std::pair<cplx, cplx>{1.0, 0.0}
                                           : std::pair<cplx, cplx>{cplx(g(rng), g(rng)), 1.0};
            const auto sp = nf::SpherePoint::from(r.first, r.second);
            bool far = true;
            for (const auto& q : distinct) far = far && nf::chordal(sp, q) >= 1e-3;
            if (!far) continue;
            distinct.push_back(sp);
            pts.push_back(r);
        }
        std::vector<std::pair<cplx, cplx>> multiset;
        for (std::size_t i = 0; i < shape.size(); ++i) multiset.insert(multiset.end(), std::size_t(shape[i]), pts[i]);
        const auto found = nf::principal_roots(psi_with_roots(multiset, cplx(g(rng), g(rng))));
        auto want = shape;
        std::sort(want.rbegin(), want.rend());
        right += found.partition() == want;
        ++total;
    }
    o.require("all synthetic partitions", right == total);
    o.detail << "  partitions " << right << "/" << total;

    int rows = 0;
    for (int q = 1; q <= 4; ++q) {
        nf::PsiSet psi{};
        for (int n = q; n < 5; ++n) psi[std::size_t(n)] = cplx(g(rng), g(rng));
        for (const auto& r : nf::principal_roots(psi).roots)
            rows += nf::chordal(r.point, nf::SpherePoint::affine(0.0)) < 1e-7 && r.multiplicity == q;
    }
    o.require("vanishing leading Psi rows", rows == 4);
    o.detail << "  truncation rows " << rows << "/4";

    double pairing = 0.0;
    int consistent = 0, sets = 0;
    for (int t = 0; t < 100; ++t) {
        const cplx p0(g(rng), g(rng)), p1(g(rng), g(rng));
        const double p2 = g(rng);
        const std::vector<std::pair<nf::Signature, nf::PsiSet>> cases{
            {nf::Signature::E, {p0, p1, p2, std::conj(p1), std::conj(p0)}},
            {nf::Signature::Sc, {p0, p1, p2, -std::conj(p1), std::conj(p0)}},
            {nf::Signature::Sr, {g(rng), g(rng), g(rng), g(rng), g(rng)}}};
        for (const auto& [tag, psi] : cases) {
            const auto f = nf::classify(psi, tag);
            pairing = std::max(pairing, f.pairing_residual);
            consistent += f.consistent;
            ++sets;
        }
    }
    o.below("pairing", pairing, 1e-8);
    o.require("pairings consistent", consistent == sets);
    o.detail << "  reality sets " << consistent << "/" << sets;
    return o;
}

// 6. whenever two of (0), (i), (ii) hold the third does
Outcome theorem_consistency() {
    Outcome o;
    const auto points = nf::sample_points(kLo, kHi, 20, kSeed);
    int applied = 0, closed = 0;
    double worst = 0.0;
    for (const auto& entry : nf::catalog_entries()) {
        nf::CatalogParams params;
        if (entry.name == "conformally-flat") params["upsilon"] = "x1*x3";
        const auto spec = nf::catalog_get(entry.name, params);
        for (const auto& p : points) {
            const auto r = nf::gs_verdict(nf::compute_frame_data(spec, p));
            for (const auto& im : r.implications) {
                if (!im.applies) continue;
                ++applied;
                closed += im.holds;
                worst = std::max(worst, im.residual);
            }
        }
    }
    o.require("implications close", closed == applied);
    o.below("conclusion residual", worst, 1e-7);
    o.detail << "  applied " << applied;

    int exhibited = 0;
    const auto spec = nf::catalog_get("counterexample");
    for (const auto& p : points) {
        const auto f = nf::degeneracy_checks(nf::compute_frame_data(spec, p));
        exhibited += f.integrable.pass_local && !f.alg_special.pass && !f.cotton_degenerate.pass;
    }
    o.require("counterexample (i) and not (ii), not (0)", exhibited == int(points.size()));
    o.detail << "  counterexample " << exhibited << "/" << points.size();
    return o;
}

// Coframe of the null-rotated frame m' = m + z n, k' = k - z p (p, n unchanged):
// M' = M, P' = P + z K, N' = N - z M, K' = K.
nf::CoframeSpec null_rotated(const nf::CoframeSpec& spec, cplx z) {
    const std::string zs = "(" + support::num(z.real()) + " + " + support::num(z.imag()) + "*i)";
    nf::A44<std::string> comps;
    for (int mu = 0; mu < 4; ++mu) {
        auto t = [&](int a) { return "(" + nf::print(spec.theta[a][mu]) + ")"; };
        comps[0][mu] = t(0);
        comps[1][mu] = t(1) + " + " + zs + "*" + t(3);
        comps[2][mu] = t(2) + " - " + zs + "*" + t(0);
        comps[3][mu] = t(3);
    }
    return nf::make_spec(comps, nf::Signature::Complex);
}

// 7. independent oracles: finite differences, three readings of Psi0, two characteristic connections
Outcome oracles() {
    Outcome o;
    std::mt19937 rng(kSeed);
    std::vector<nf::CoframeSpec> specs{nf::catalog_get("counterexample"),
                                       nf::catalog_get("conformally-flat", {{"upsilon", "x1*x3"}})};
    for (int i = 0; i < 3; ++i) specs.push_back(support::random_coframe(rng, nf::Signature::Complex, 2));
    double fd = 0.0;
    int comps = 0;
    for (const auto& spec : specs) {
        const nf::Point p = support::random_point(rng);
        for (const auto& form : spec.theta)
            for (const auto& e : form) {
                fd = std::max(fd, oracle::fd_check(e, p, 4, 1e-3).max_rel);
                ++comps;
            }
    }
    o.below("jet vs FD rel", fd, 1e-5);

    // Psi0 of the null-rotated frame m + z n, k - z p read three ways from the original frame
    double psi0 = 0.0;
    std::normal_distribution<double> g(0.0, 0.7);
    for (const auto& spec : specs) {
        const nf::Point p = support::random_point(rng);
        const cplx z(g(rng), g(rng));
        const auto d = nf::compute_frame_data(spec, p);
        const auto turned = nf::compute_frame_data(null_rotated(spec, z), p);
        const auto C = nf::weyl_assemble(d.riemann.R, d.riemann.P);
        const nf::A4<cplx> X{1.0, 0.0, z, 0.0}, Y{0.0, -z, 0.0, 1.0};
        const auto& k = d.scalars;
        const cplx quartic = k.Psi(4) * std::pow(z, 4) - 4.0 * k.Psi(3) * std::pow(z, 3) +
                             6.0 * k.Psi(2) * z * z + 4.0 * k.Psi(1) * z + k.Psi(0);
        const cplx a = turned.scalars.Psi(0), b = nf::contract4(C, X, Y), c = nf::K0(d.riemann.R, X, Y);
        const double scale = curvature_scale(k) * std::pow(1.0 + std::abs(z), 4);
        psi0 = std::max(psi0, std::max({std::abs(a - b), std::abs(a - c), std::abs(a - quartic)}) / scale);
    }
    o.below("Psi0 readings", psi0, 1e-9);

    double char_gap = 0.0;
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 6; ++i) {
        const auto spec = i < 2 ? nf::catalog_get(i == 0 ? "counterexample" : "pp-special")
                                : support::integrable_sample(rng, false);
        const auto d = nf::compute_frame_data(spec, support::random_point(rng), 3);
        const auto direct = nf::characteristic_derivatives(d.spin);
        for (const auto& B : {nf::canonical_weyl_form(d.spin),
                              nf::weyl_form(d.spin, cplx(u(rng), u(rng)), cplx(u(rng), u(rng)))}) {
            const auto restricted = nf::restrict_weyl(nf::weyl_connection(d.gamma, B));
            for (int A = 0; A < 2; ++A)
                for (int Bi = 0; Bi < 2; ++Bi)
                    for (int C = 0; C < 2; ++C)
                        char_gap = std::max(char_gap, nf::max_abs_diff(direct.at(A, Bi, C), restricted.at(A, Bi, C)));
        }
    }
    o.below("characteristic vs Weyl restriction", char_gap, 1e-10);
    o.detail << "  components " << comps;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double seconds;  // runtime bound, 0 for none
    };
    const std::vector<Criterion> criteria{
        {"counterexample regression", counterexample, 1.0},
        {"identity suites", identity_suites, 10.0},
        {"Goldberg-Sachs identity chain", identity_chain, 0.0},
        {"conformal laws", conformal_laws, 0.0},
        {"Petrov classifier", petrov_classifier, 0.0},
        {"theorem consistency", theorem_consistency, 0.0},
        {"oracle cross-checks", oracles, 0.0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "  exception: " << e.what();
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.seconds > 0.0) o.below("seconds", dt, c.seconds);
        failed += !o.pass;
        std::printf("%s  %zu %-30s %.3fs%s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, dt, o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
