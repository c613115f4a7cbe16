#include "nullframe/connection.hpp"

#include <algorithm>
#include <cmath>

namespace nf {

ConnectionCoefficients levi_civita(const StructureCoefficients& s) {
    // lowered c_abc = g_ae c^e_bc
    auto low = [&](int a, int b, int c) -> const Jet& { return s.c[partner(a)][b][c]; };
    ConnectionCoefficients g;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                if (a == b) {
                    g.gamma[a][b][c] = Jet(s.c[0][0][0].order());
                    continue;
                }
                if (b < a) continue;
                Jet v = (low(c, a, b) - low(a, b, c) - low(b, c, a)) * 0.5;
                g.gamma[b][a][c] = -v;
                g.gamma[a][b][c] = std::move(v);
            }
    return g;
}

double torsion_residual(const ConnectionCoefficients& g, const StructureCoefficients& s) {
    double r = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                r = std::max(r, max_abs_diff(g.up(a, c, b) - g.up(a, b, c), s.c[a][b][c]));
    return r;
}

double SpinCoefficients::max_abs() const {
    double m = 0.0;
    for (int l = 0; l < 12; ++l) m = std::max({m, std::abs(u[l].value()), std::abs(p[l].value())});
    return m;
}

SpinCoefficients name_spin_coefficients(const ConnectionCoefficients& g) {
    const auto& G = g.gamma;
    SpinCoefficients s;
    const Letter g14[4] = {kSigma, kRho, kTau, kKappa};
    const Letter g23[4] = {kMu, kLambda, kNu, kPi};
    const Letter x[4] = {kBeta, kAlpha, kGamma, kEpsilon};
    const Letter y[4] = {kAlpha, kBeta, kGamma, kEpsilon};
    const Letter g13[4] = {kLambda, kMu, kNu, kPi};
    const Letter g24[4] = {kRho, kSigma, kTau, kKappa};
    for (int c = 0; c < 4; ++c) {
        s.u[g14[c]] = G[0][3][c];
        s.u[g23[c]] = G[1][2][c];
        s.u[x[c]] = (G[2][3][c] - G[0][1][c]) * 0.5;
        s.p[y[c]] = (G[0][1][c] + G[2][3][c]) * 0.5;
        s.p[g13[c]] = G[0][2][c];
        s.p[g24[c]] = G[1][3][c];
    }
    return s;
}

ConnectionCoefficients assemble_connection(const SpinCoefficients& s) {
    const Letter g14[4] = {kSigma, kRho, kTau, kKappa};
    const Letter g23[4] = {kMu, kLambda, kNu, kPi};
    const Letter x[4] = {kBeta, kAlpha, kGamma, kEpsilon};
    const Letter y[4] = {kAlpha, kBeta, kGamma, kEpsilon};
    const Letter g13[4] = {kLambda, kMu, kNu, kPi};
    const Letter g24[4] = {kRho, kSigma, kTau, kKappa};
    ConnectionCoefficients g;
    const int n = s.u[0].order();
    for (auto& p : g.gamma)
        for (auto& q : p)
            for (auto& r : q) r = Jet(n);
    auto set = [&](int a, int b, int c, const Jet& v) {
        g.gamma[a][b][c] = v;
        g.gamma[b][a][c] = -v;
    };
    for (int c = 0; c < 4; ++c) {
        set(0, 3, c, s.u[g14[c]]);
        set(1, 2, c, s.u[g23[c]]);
        set(0, 1, c, s.p[y[c]] - s.u[x[c]]);
        set(2, 3, c, s.p[y[c]] + s.u[x[c]]);
        set(0, 2, c, s.p[g13[c]]);
        set(1, 3, c, s.p[g24[c]]);
    }
    return g;
}

bool is_integrable(const SpinCoefficients& s, const IntegrabilityTol& tol) {
    const double t = tol.threshold(s);
    return std::abs(s(kKappa)) < t && std::abs(s(kSigma)) < t;
}

namespace {

void require_integrable(const SpinCoefficients& s, const IntegrabilityTol& tol) {
    if (!is_integrable(s, tol))
        throw NotIntegrable("kappa or sigma exceeds the integrability tolerance (|kappa| = " +
                            std::to_string(std::abs(s(kKappa))) + ", |sigma| = " + std::to_string(std::abs(s(kSigma))) +
                            ")");
}

}  // namespace

WeylForm canonical_weyl_form(const SpinCoefficients& s, const IntegrabilityTol& tol) {
    require_integrable(s, tol);
    WeylForm w;
    w.B = {s.u[kTau] * 2.0, s.u[kPi] * 2.0, s.u[kMu] * -2.0, s.u[kRho] * -2.0};
    w.determined = {true, true, true, true};
    return w;
}

WeylForm weyl_form(const SpinCoefficients& s, cplx b2, cplx b3, const IntegrabilityTol& tol) {
    require_integrable(s, tol);
    WeylForm w;
    const int n = s.u[0].order();
    w.B = {s.u[kTau] * 2.0, Jet(n, b2), Jet(n, b3), s.u[kRho] * -2.0};
    w.determined = {true, false, false, true};
    return w;
}

ConnectionCoefficients weyl_connection(const ConnectionCoefficients& g, const WeylForm& w) {
    ConnectionCoefficients r = g;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                Jet add(w.B[0].order());
                if (gab(c, a) != 0.0) add += w.B[b];
                if (gab(c, b) != 0.0) add -= w.B[a];
                if (gab(a, b) != 0.0) add += w.B[c];
                r.gamma[a][b][c] += add * 0.5;
            }
    return r;
}

CharacteristicConnection characteristic_derivatives(const SpinCoefficients& s, const IntegrabilityTol& tol) {
    require_integrable(s, tol);
    const auto& u = s.u;
    const auto& p = s.p;
    CharacteristicConnection c;
    // nabla_m m
    c.omega[0][0][0] = u[kBeta] - p[kAlpha] + u[kTau] * 2.0;
    c.omega[1][0][0] = -p[kLambda];
    // nabla_k m
    c.omega[0][0][1] = u[kEpsilon] - p[kEpsilon] - u[kRho];
    c.omega[1][0][1] = u[kTau] - p[kPi];
    // nabla_m k
    c.omega[0][1][0] = p[kRho] - u[kRho];
    c.omega[1][1][0] = p[kAlpha] + u[kBeta] + u[kTau];
    // nabla_k k
    c.omega[0][1][1] = p[kKappa];
    c.omega[1][1][1] = u[kEpsilon] + p[kEpsilon] - u[kRho] * 2.0;
    return c;
}

CharacteristicConnection restrict_weyl(const ConnectionCoefficients& w) {
    const int idx[2] = {0, 3};
    CharacteristicConnection c;
    for (int B = 0; B < 2; ++B)
        for (int C = 0; C < 2; ++C) {
            // W Gamma^1_bc = W Gamma_2bc, W Gamma^4_bc = W Gamma_3bc
            c.omega[0][B][C] = w.gamma[1][idx[B]][idx[C]];
            c.omega[1][B][C] = w.gamma[2][idx[B]][idx[C]];
        }
    return c;
}

}  // namespace nf
