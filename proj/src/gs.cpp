#include "nullframe/gs.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nf {

CoframeSpec conformal_rescale(const CoframeSpec& spec, const Expr& upsilon) {
    CoframeSpec out = spec;
    const Expr factor = make_func(Fn::Exp, upsilon);
    for (auto& row : out.theta)
        for (auto& e : row) e = make_binary(Op::Mul, factor, e);
    return out;
}

namespace {

constexpr int kN[2] = {0, 3};  // frame index of m and k

double gradient_norm(const Jet& j) {
    if (j.order() < 1) return 0.0;
    double g = 0.0;
    for (int k = 0; k < kVars; ++k) g = std::max(g, std::abs(j.derivative(k).value()));
    return g;
}

Condition condition(std::string name, const std::vector<std::pair<std::string, Jet>>& comps, double tol) {
    Condition c;
    c.name = std::move(name);
    c.tolerance = tol;
    for (const auto& [label, j] : comps) {
        c.components.emplace_back(label, j.value());
        c.residual = std::max(c.residual, std::abs(j.value()));
        c.local_residual = std::max({c.local_residual, std::abs(j.value()), gradient_norm(j)});
    }
    c.pass = c.residual <= tol;
    c.pass_local = c.local_residual <= tol;
    return c;
}

double curvature_scale(const FrameData& d) {
    double s = 0.0;
    for (int n = 0; n < 5; ++n) s = std::max({s, std::abs(d.scalars.Psi(n)), std::abs(d.scalars.PsiP(n))});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s = std::max(s, std::abs(d.scalars.P[a][b].value()));
    return 1.0 + s;
}

double cotton_scale(const FrameData& d) {
    double s = 0.0;
    for (const auto& p : d.A)
        for (const auto& q : p)
            for (const auto& r : q) s = std::max(s, std::abs(r.value()));
    return curvature_scale(d) + s;
}

IdentityCheck identity(std::string name, cplx value, cplx expected, double tol) {
    IdentityCheck c;
    c.name = std::move(name);
    c.value = value;
    c.expected = expected;
    c.tolerance = tol;
    c.residual = std::abs(value - expected) / (1.0 + std::abs(expected));
    c.pass = c.residual <= tol;
    return c;
}

}  // namespace

DegeneracyFlags degeneracy_checks(const FrameData& d, const GSTolerances& tol) {
    DegeneracyFlags f;
    const auto& s = d.spin;
    f.integrable = condition("integrable", {{"kappa", s.u[kKappa]}, {"sigma", s.u[kSigma]}},
                             IntegrabilityTol{tol.rel}.threshold(s));
    if (!d.has_curvature) return f;

    const double ct = tol.rel * curvature_scale(d);
    // 1-based Schouten access
    auto P = [&](int a, int b) { return d.scalars.P[a - 1][b - 1]; };
    f.ric_degenerate = condition("ric_degenerate", {{"P11", P(1, 1)}, {"P14", P(1, 4)}, {"P44", P(4, 4)}}, ct);
    f.einstein = condition("einstein",
                           {{"P11", P(1, 1)},
                            {"P14", P(1, 4)},
                            {"P44", P(4, 4)},
                            {"P13", P(1, 3)},
                            {"P22", P(2, 2)},
                            {"P23", P(2, 3)},
                            {"P24", P(2, 4)},
                            {"P33", P(3, 3)},
                            {"P12-P34", P(1, 2) - P(3, 4)}},
                           ct);
    f.alg_special = condition("alg_special", {{"Psi0", d.scalars.psi[0]}, {"Psi1", d.scalars.psi[1]}}, ct);
    if (!d.has_cotton) return f;

    const double at = tol.rel * cotton_scale(d);
    auto A = [&](int a, int b, int c) { return d.A[a - 1][b - 1][c - 1]; };
    f.cotton_degenerate = condition("cotton_degenerate", {{"A141", A(1, 4, 1)}, {"A441", A(4, 4, 1)}}, at);
    f.cotton_cross = condition("cotton_cross", {{"A341", A(3, 4, 1)}, {"A214", A(2, 1, 4)}}, at);
    f.cotton_strong = condition("cotton_strong",
                              {{"A114", A(1, 1, 4)},
                               {"A414", A(4, 1, 4)},
                               {"A341", A(3, 4, 1)},
                               {"A214", A(2, 1, 4)},
                               {"A123", A(1, 2, 3)},
                               {"A423", A(4, 2, 3)}},
                              at);
    f.cotton_identity_m = (A(1, 1, 2) - A(1, 3, 4) - 2.0 * A(3, 4, 1)).value();
    f.cotton_identity_k = (A(4, 1, 2) - A(4, 3, 4) - 2.0 * A(2, 1, 4)).value();
    return f;
}

namespace {

// Covariant derivative along N of a tensor with all indices on N.
// T is indexed by a flat list of N-indices; returns (nabla_C T)_{...} for each C.
struct NTensor {
    int rank = 0;
    std::vector<Jet> v;  // 2^rank entries, index bits most significant first
    const Jet& at(int i) const { return v[i]; }
};

NTensor nabla_n(const CoframeEval& ev, const CharacteristicConnection& w, const NTensor& T) {
    NTensor out;
    out.rank = T.rank + 1;
    const int m = 1 << T.rank;
    out.v.resize(std::size_t(2 * m));
    for (int C = 0; C < 2; ++C)
        for (int i = 0; i < m; ++i) {
            Jet r = directional(ev, kN[C], T.at(i));
            for (int slot = 0; slot < T.rank; ++slot) {
                const int shift = T.rank - 1 - slot;
                const int A = (i >> shift) & 1;
                for (int E = 0; E < 2; ++E) {
                    const int j = (i & ~(1 << shift)) | (E << shift);
                    r -= w.at(E, A, C) * T.at(j);
                }
            }
            out.v[std::size_t(C * m + i)] = std::move(r);
        }
    return out;
}

// Full curvature R^E_B(m,k) as jets; requires integrability only through the projection of [m,k].
std::array<std::array<Jet, 2>, 2> char_curvature_jets(const FrameData& d, const CharacteristicConnection& w) {
    const auto& c = d.c.c;
    std::array<std::array<Jet, 2>, 2> R;
    for (int E = 0; E < 2; ++E)
        for (int B = 0; B < 2; ++B) {
            Jet r = directional(d.ev, kN[0], w.at(E, B, 1)) - directional(d.ev, kN[1], w.at(E, B, 0));
            for (int A = 0; A < 2; ++A) {
                r += w.at(A, B, 1) * w.at(E, A, 0) - w.at(A, B, 0) * w.at(E, A, 1);
                r -= c[kN[A]][0][3] * w.at(E, B, A);
            }
            R[E][B] = std::move(r);
        }
    return R;
}

}  // namespace

CharacteristicCurvature characteristic_curvature(const FrameData& d, const IntegrabilityTol& tol) {
    const CharacteristicConnection w = characteristic_derivatives(d.spin, tol);
    CharacteristicCurvature out;
    const auto& c = d.c.c;
    for (int A = 0; A < 2; ++A)
        out.torsion[A] = w.at(A, 1, 0).value() - w.at(A, 0, 1).value() - c[kN[A]][0][3].value();
    out.torsion_out = {c[1][0][3].value(), c[2][0][3].value()};
    const auto R = char_curvature_jets(d, w);
    for (int E = 0; E < 2; ++E)
        for (int B = 0; B < 2; ++B) out.R[E][B] = R[E][B].value();
    out.scalar = 0.5 * (out.R[0][0] + out.R[1][1]);
    out.identity_residual = std::max({std::abs(out.R[0][0] - out.scalar), std::abs(out.R[1][1] - out.scalar),
                                      std::abs(out.R[0][1]), std::abs(out.R[1][0])});
    // R_AB = R^C_ACB; with R^E_B(m,k) = s delta: R_mk = R^m_mmk = s
    out.ricci_mk = out.R[0][0];
    return out;
}

cplx second_curvature_identity(const FrameData& d, const IntegrabilityTol& tol) {
    const CharacteristicConnection w = characteristic_derivatives(d.spin, tol);
    const auto R = char_curvature_jets(d, w);
    // R^E_{B CD} with CD = (m,k) -> R[E][B], antisymmetric in CD
    auto curv = [&](int E, int B, int C, int D) -> Jet {
        if (C == D) return Jet(R[0][0].order());
        return C == 0 ? R[E][B] : -R[E][B];
    };
    NTensor ric{2, {}};
    for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B) {
            Jet r = curv(0, A, 0, B) + curv(1, A, 1, B);
            ric.v.push_back(std::move(r));
        }
    const NTensor d1 = nabla_n(d.ev, w, ric);  // index order (D, A, B)
    const NTensor d2 = nabla_n(d.ev, w, d1);   // (C, D, A, B)
    // C = m, D = k, A = m, B = k; eps_mk = 1
    const int mkmk = 0b0101, kmmk = 0b1001;
    return 0.5 * (d2.at(mkmk).value() - d2.at(kmmk).value());
}

cplx hermitian_weyl_identity(const FrameData& d, const IntegrabilityTol& tol) {
    const WeylForm B = canonical_weyl_form(d.spin, tol);
    const ConnectionCoefficients W = weyl_connection(d.gamma, B);
    const Riemann WR = riemann(d.ev, d.c, W);
    const A444<Jet> WA = cotton(d.ev, W, WR.P);
    return nabla3(d.ev, W, WA, 3, 0, 3, 0).value() - nabla3(d.ev, W, WA, 0, 3, 3, 0).value();
}

GSReport gs_verdict(const FrameData& d, const GSTolerances& tol) {
    GSReport r;
    r.point = d.ev.point;
    r.flags = degeneracy_checks(d, tol);
    if (!d.has_curvature) return r;

    const auto& f = r.flags;
    const double ct = tol.rel * curvature_scale(d);
    r.psi2_nonzero = std::abs(d.scalars.Psi(2)) > ct;
    r.psi3_nonzero = std::abs(d.scalars.Psi(3)) > ct;
    r.psi4_nonzero = std::abs(d.scalars.Psi(4)) > ct;

    const cplx psi1 = d.scalars.Psi(1);
    const IntegrabilityTol itol{tol.rel};
    if (f.integrable.pass) {
        auto chk = [&](const char* name, cplx v, cplx e, double t) { r.identities.push_back(identity(name, v, e, t)); };
        const CharacteristicCurvature cc = characteristic_curvature(d, itol);
        r.characteristic = cc;
        const double tscale = 1.0 + d.spin.max_abs();
        chk("torsion", std::abs(cc.torsion[0]) + std::abs(cc.torsion[1]), 0.0, tol.rel * tscale);
        chk("char-curvature-identity", cc.identity_residual, 0.0, tol.rel * curvature_scale(d));
        chk("char-curvature=4Psi1", cc.scalar, 4.0 * psi1, tol.rel * curvature_scale(d));
        if (d.has_cotton) {
            r.S = s_scalar(d.ev, d.gamma, d.A, d.spin, itol);
            chk("S=-10Psi1^2", *r.S, -10.0 * psi1 * psi1, tol.identity);
            chk("second-curvature=-16Psi1^2", second_curvature_identity(d, itol), -16.0 * psi1 * psi1, tol.identity);
            chk("hermitian-weyl=16Psi1^2", hermitian_weyl_identity(d, itol), 16.0 * psi1 * psi1, 10.0 * tol.identity);
        }
    }

    if (!d.has_cotton) return r;
    const Condition& c0 = f.cotton_degenerate;
    const Condition& ci = f.integrable;
    const Condition& cii = f.alg_special;
    auto implication = [&](std::string name, const Condition& h1, const Condition& h2, const Condition& concl,
                           bool needs_generic) {
        Implication im;
        im.name = std::move(name);
        im.applies = h1.pass_local && h2.pass_local && (!needs_generic || r.psi2_nonzero);
        im.residual = concl.residual;
        if (im.applies) {
            im.holds = concl.pass;
            if (!im.holds)
                r.failures.push_back(im.name + ": " + concl.name + " residual " + std::to_string(concl.residual) +
                                     " above " + std::to_string(concl.tolerance));
        }
        r.implications.push_back(std::move(im));
    };
    implication("(0)&(i)=>(ii)", c0, ci, cii, false);
    implication("(i)&(ii)=>(0)", ci, cii, c0, false);
    implication("(0)&(ii)=>(i)", c0, cii, ci, true);

    if (f.einstein.pass_local && cii.pass_local)
        r.sigma_kappa_psi2 = std::make_pair(d.spin(kSigma) * d.scalars.Psi(2), d.spin(kKappa) * d.scalars.Psi(2));
    return r;
}

RescaleCheck rescale_check(const FrameData& base, const FrameData& hat, const Expr& upsilon) {
    RescaleCheck out;
    const Jet U = eval_jet(upsilon, base.ev.point, base.ev.order);
    out.upsilon = U.value();
    const cplx e2 = std::exp(-2.0 * out.upsilon), e3 = std::exp(-3.0 * out.upsilon), e4 = std::exp(-4.0 * out.upsilon);
    const cplx psi1 = base.scalars.Psi(1);
    const cplx dU = directional(base.ev, 0, U).value(), DU = directional(base.ev, 3, U).value();
    if (base.has_cotton && hat.has_cotton) {
        out.a141_law = std::abs(hat.A[0][3][0].value() - e3 * (base.A[0][3][0].value() - psi1 * dU));
        out.a441_law = std::abs(hat.A[3][3][0].value() - e3 * (base.A[3][3][0].value() - psi1 * DU));
    }
    for (int n = 0; n < 5; ++n) {
        out.psi_law = std::max(out.psi_law, std::abs(hat.scalars.Psi(n) - e2 * base.scalars.Psi(n)));
        out.psi_law = std::max(out.psi_law, std::abs(hat.scalars.PsiP(n) - e2 * base.scalars.PsiP(n)));
    }
    out.integrable_preserved = is_integrable(base.spin) == is_integrable(hat.spin);
    out.s_law = -1.0;
    if (base.has_cotton && is_integrable(base.spin) && is_integrable(hat.spin)) {
        const cplx S = s_scalar(base.ev, base.gamma, base.A, base.spin);
        const cplx Sh = s_scalar(hat.ev, hat.gamma, hat.A, hat.spin);
        out.s_law = std::abs(Sh - e4 * S) / (1.0 + std::abs(S));
    }

    PsiSet p0, p1;
    for (int n = 0; n < 5; ++n) {
        p0[std::size_t(n)] = base.scalars.Psi(n);
        p1[std::size_t(n)] = hat.scalars.Psi(n);
    }
    const PrincipalRoots r0 = principal_roots(p0), r1 = principal_roots(p1);
    if (r0.all_zero != r1.all_zero || r0.roots.size() != r1.roots.size()) {
        out.roots = 2.0;  // beyond any chordal distance
        return out;
    }
    for (const auto& a : r0.roots) {
        double best = 2.0;
        for (const auto& b : r1.roots)
            if (a.multiplicity == b.multiplicity) best = std::min(best, chordal(a.point, b.point));
        out.roots = std::max(out.roots, best);
    }
    return out;
}

std::vector<Point> sample_points(const Point& lo, const Point& hi, int n, unsigned seed) {
    static constexpr int primes[4] = {2, 3, 5, 7};
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Point shift;
    for (auto& s : shift) s = u(gen);
    std::vector<Point> out;
    out.reserve(std::size_t(std::max(n, 0)));
    for (int i = 1; i <= n; ++i) {
        Point p;
        for (int k = 0; k < 4; ++k) {
            double h = 0.0, f = 1.0 / primes[k];
            for (int j = i; j > 0; j /= primes[k], f /= primes[k]) h += f * (j % primes[k]);
            const double t = std::fmod(h + shift[std::size_t(k)], 1.0);
            p[std::size_t(k)] = lo[std::size_t(k)] + t * (hi[std::size_t(k)] - lo[std::size_t(k)]);
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace nf
