#include "nullframe/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace nf {

A4444<Jet> curvature_tensor(const CoframeEval& ev, const StructureCoefficients& s, const ConnectionCoefficients& g) {
    const auto& G = g.gamma;
    const int n = G[0][0][0].order() - 1;
    // derivatives e_c(G_abd)
    A4<A444<Jet>> dG;
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int d = 0; d < 4; ++d) dG[c][a][b][d] = directional(ev, c, G[a][b][d]);

    A4444<Jet> R;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            for (int c = 0; c < 4; ++c) R[a][b][c][c] = Jet(n);
            for (int c = 0; c < 4; ++c)
                for (int d = c + 1; d < 4; ++d) {
                    Jet r = dG[c][a][b][d] - dG[d][a][b][c];
                    for (int e = 0; e < 4; ++e) r -= G[a][b][e] * s.c[e][c][d];
                    for (int f = 0; f < 4; ++f) {
                        // G_afc G^f_bd - G_afd G^f_bc, G^f_bd = G_{partner(f) b d}
                        r += G[a][f][c] * g.up(f, b, d) - G[a][f][d] * g.up(f, b, c);
                    }
                    R[a][b][d][c] = -r;
                    R[a][b][c][d] = std::move(r);
                }
        }
    return R;
}

Riemann contract(const A4444<Jet>& R) {
    Riemann out;
    out.R = R;
    const int n = R[0][0][0][0].order();
    for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d) {
            // R_bd = R^a_bad = R_{partner(a) b a d}
            Jet r(n);
            for (int a = 0; a < 4; ++a) r += R[partner(a)][b][a][d];
            out.ricci[b][d] = r;
        }
    out.scalar = Jet(n);
    for (int b = 0; b < 4; ++b) out.scalar += out.ricci[b][partner(b)];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            out.P[a][b] = out.ricci[a][b] * 0.5;
            if (gab(a, b) != 0.0) out.P[a][b] -= out.scalar * (1.0 / 12.0);
        }
    return out;
}

Riemann riemann(const CoframeEval& ev, const StructureCoefficients& c, const ConnectionCoefficients& g) {
    return contract(curvature_tensor(ev, c, g));
}

CurvatureScalars decompose(const A4444<Jet>& R, double tol) {
    // 1-based helper
    auto r = [&](int a, int b, int c, int d) -> const Jet& { return R[a - 1][b - 1][c - 1][d - 1]; };
    CurvatureScalars k;
    const int n = R[0][0][0][0].order();
    for (auto& row : k.P)
        for (auto& v : row) v = Jet(n);
    k.P_primed = k.P;

    auto setP = [](A44<Jet>& P, int a, int b, const Jet& v) {
        P[a - 1][b - 1] = v;
        P[b - 1][a - 1] = v;
    };

    // unprimed: Omega14, Omega23 and X = 1/2(-Omega12 + Omega34)
    auto X = [&](int c, int d) { return (r(3, 4, c, d) - r(1, 2, c, d)) * 0.5; };
    k.psi[0] = r(1, 4, 1, 4);
    k.psi[1] = (r(1, 4, 3, 4) - r(1, 4, 1, 2)) * 0.5;
    k.psi[3] = (r(2, 3, 1, 2) - r(2, 3, 3, 4)) * 0.5;
    k.psi[4] = r(2, 3, 2, 3);
    const Jet a = X(1, 2), b = X(3, 4), c = r(1, 4, 2, 3);
    k.psi[2] = (c - a + b) * (1.0 / 3.0);
    setP(k.P, 1, 1, r(1, 4, 1, 3));
    setP(k.P, 4, 4, r(1, 4, 2, 4));
    setP(k.P, 1, 4, (r(1, 4, 1, 2) + r(1, 4, 3, 4)) * -0.5);
    setP(k.P, 3, 3, r(2, 3, 1, 3));
    setP(k.P, 2, 2, r(2, 3, 2, 4));
    setP(k.P, 2, 3, (r(2, 3, 1, 2) + r(2, 3, 3, 4)) * 0.5);
    setP(k.P, 1, 3, X(1, 3));
    setP(k.P, 2, 4, -X(2, 4));
    setP(k.P, 1, 2, a + k.psi[2]);
    setP(k.P, 3, 4, k.psi[2] - b);

    // primed: Omega24, Omega13 and Y = 1/2(Omega12 + Omega34)
    auto Y = [&](int c, int d) { return (r(1, 2, c, d) + r(3, 4, c, d)) * 0.5; };
    k.psi_p[0] = r(2, 4, 2, 4);
    k.psi_p[1] = (r(2, 4, 1, 2) + r(2, 4, 3, 4)) * 0.5;
    k.psi_p[3] = (r(1, 3, 1, 2) + r(1, 3, 3, 4)) * -0.5;
    k.psi_p[4] = r(1, 3, 1, 3);
    const Jet y12 = Y(1, 2), y34 = Y(3, 4);
    k.psi_p[2] = (y12 + y34 + r(2, 4, 1, 3)) * (1.0 / 3.0);
    setP(k.P_primed, 2, 2, r(2, 4, 2, 3));
    setP(k.P_primed, 4, 4, r(2, 4, 1, 4));
    setP(k.P_primed, 2, 4, (r(2, 4, 1, 2) - r(2, 4, 3, 4)) * 0.5);
    setP(k.P_primed, 3, 3, r(1, 3, 2, 3));
    setP(k.P_primed, 1, 1, r(1, 3, 1, 4));
    setP(k.P_primed, 1, 3, (r(1, 3, 3, 4) - r(1, 3, 1, 2)) * 0.5);
    setP(k.P_primed, 2, 3, Y(2, 3));
    setP(k.P_primed, 1, 4, -Y(1, 4));
    setP(k.P_primed, 1, 2, k.psi_p[2] - y12);
    setP(k.P_primed, 3, 4, k.psi_p[2] - y34);

    k.R = (k.P[0][1] + k.P[2][3]) * 12.0;

    double scale = 1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            k.reading_gap = std::max(k.reading_gap, std::abs(k.P[i][j].value() - k.P_primed[i][j].value()));
            scale = std::max(scale, std::abs(k.P[i][j].value()));
        }
    if (k.reading_gap > tol * scale)
        throw DecompositionInconsistent("Schouten readings from the selfdual and antiselfdual equations differ by " +
                                        std::to_string(k.reading_gap));
    return k;
}

A4444<cplx> weyl_assemble(const A4444<Jet>& R, const A44<Jet>& P) {
    A4444<cplx> C;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                    C[a][b][c][d] = R[a][b][c][d].value() + gab(a, d) * P[c][b].value() - gab(a, c) * P[d][b].value() +
                                    gab(b, c) * P[d][a].value() - gab(b, d) * P[c][a].value();
    return C;
}

cplx contract4(const A4444<cplx>& C, const A4<cplx>& X, const A4<cplx>& Y) {
    cplx s = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) s += C[a][b][c][d] * X[a] * Y[b] * X[c] * Y[d];
    return s;
}

cplx K0(const A4444<Jet>& R, const A4<cplx>& X, const A4<cplx>& Y) {
    A4444<cplx> v;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) v[a][b][c][d] = R[a][b][c][d].value();
    return contract4(v, X, Y);
}

Jet nabla2(const CoframeEval& ev, const ConnectionCoefficients& g, const A44<Jet>& T, int c, int a, int b) {
    Jet r = directional(ev, c, T[a][b]);
    for (int d = 0; d < 4; ++d) r -= g.up(d, a, c) * T[d][b] + g.up(d, b, c) * T[a][d];
    return r;
}

Jet nabla3(const CoframeEval& ev, const ConnectionCoefficients& g, const A444<Jet>& A, int d, int a, int b, int c) {
    Jet r = directional(ev, d, A[a][b][c]);
    for (int e = 0; e < 4; ++e)
        r -= g.up(e, a, d) * A[e][b][c] + g.up(e, b, d) * A[a][e][c] + g.up(e, c, d) * A[a][b][e];
    return r;
}

A444<Jet> cotton(const CoframeEval& ev, const ConnectionCoefficients& g, const A44<Jet>& P) {
    // nP[b][c][a] = (nabla_b P)_ca
    A444<Jet> nP;
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int a = 0; a < 4; ++a) nP[b][c][a] = nabla2(ev, g, P, b, c, a);
    A444<Jet> A;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) A[a][b][c] = nP[b][c][a] - nP[c][b][a];
    return A;
}

cplx cotton_141_adapted(const CoframeEval& ev, const SpinCoefficients& s, const A44<Jet>& P) {
    const cplx DP11 = directional(ev, 3, P[0][0]).value(), dP14 = directional(ev, 0, P[0][3]).value();
    return DP11 - dP14 + (2.0 * s.primed(kEpsilon) - 2.0 * s(kEpsilon) + s.primed(kRho)) * P[0][0].value() +
           (2.0 * s(kBeta) + 2.0 * s.primed(kPi)) * P[0][3].value() - s.primed(kLambda) * P[3][3].value();
}

cplx cotton_441_adapted(const CoframeEval& ev, const SpinCoefficients& s, const A44<Jet>& P) {
    const cplx DP14 = directional(ev, 3, P[0][3]).value(), dP44 = directional(ev, 0, P[3][3]).value();
    return DP14 - dP44 - s.primed(kKappa) * P[0][0].value() +
           (2.0 * s.primed(kRho) - 2.0 * s(kEpsilon)) * P[0][3].value() +
           (2.0 * s.primed(kAlpha) + 2.0 * s(kBeta) + s.primed(kPi)) * P[3][3].value();
}

cplx s_scalar(const CoframeEval& ev, const ConnectionCoefficients& g, const A444<Jet>& A, const SpinCoefficients& s,
              const IntegrabilityTol& tol) {
    if (!is_integrable(s, tol)) throw NotIntegrable("S is only defined when kappa = sigma = 0");
    return nabla3(ev, g, A, 3, 0, 3, 0).value() - nabla3(ev, g, A, 0, 3, 3, 0).value() +
           4.0 * s(kRho) * A[0][3][0].value() + 4.0 * s(kTau) * A[3][3][0].value();
}

cplx s_scalar_derivative_form(const CoframeEval& ev, const A444<Jet>& A, const SpinCoefficients& s) {
    const cplx A141 = A[0][3][0].value(), A441 = A[3][3][0].value();
    return directional(ev, 3, A[0][3][0]).value() - directional(ev, 0, A[3][3][0]).value() -
           (3.0 * s(kEpsilon) - s.primed(kRho) - s.primed(kEpsilon) - 4.0 * s(kRho)) * A141 +
           (3.0 * s(kBeta) + s.primed(kAlpha) + s.primed(kPi) + 4.0 * s(kTau)) * A441;
}

FrameData compute_frame_data(const CoframeSpec& spec, const Point& p, int order, const EvalConfig& cfg) {
    FrameData d;
    d.ev = evaluate_coframe(spec, p, order, cfg);
    d.c = structure_coefficients(d.ev);
    d.gamma = levi_civita(d.c);
    d.spin = name_spin_coefficients(d.gamma);
    if (order >= 2) {
        d.riemann = riemann(d.ev, d.c, d.gamma);
        d.scalars = decompose(d.riemann.R);
        d.has_curvature = true;
    }
    if (order >= 3) {
        d.A = cotton(d.ev, d.gamma, d.scalars.P);
        d.has_cotton = true;
    }
    return d;
}

double residual_tolerance(int depth) {
    if (depth <= 1) return 1e-9;
    if (depth <= 3) return 1e-8;
    return 1e-7;
}

}  // namespace nf
