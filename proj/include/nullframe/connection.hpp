#pragma once

#include "nullframe/frame.hpp"

#include <array>
#include <string>

namespace nf {

class NotIntegrable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gamma[a][b][c] = Gamma_abc, component of the 1-form Gamma_ab on theta^c;
// nabla_{e_c} e_b = Gamma^a_bc e_a. For Levi-Civita Gamma_abc = -Gamma_bac.
struct ConnectionCoefficients {
    A444<Jet> gamma;
    cplx value(int a, int b, int c) const { return gamma[a][b][c].value(); }
    // Gamma^a_bc: the first index raised with the frame metric.
    const Jet& up(int a, int b, int c) const { return gamma[partner(a)][b][c]; }
};

ConnectionCoefficients levi_civita(const StructureCoefficients& c);

// Residual of d theta^a + Gamma^a_b ^ theta^b = 0, i.e. Gamma^a_cb - Gamma^a_bc - c^a_bc.
double torsion_residual(const ConnectionCoefficients& g, const StructureCoefficients& c);

enum Letter { kAlpha, kBeta, kGamma, kEpsilon, kLambda, kMu, kNu, kPi, kRho, kSigma, kTau, kKappa };
inline constexpr std::array<const char*, 12> kLetterNames{"alpha", "beta",  "gamma", "epsilon", "lambda", "mu",
                                                          "nu",    "pi",    "rho",   "sigma",   "tau",    "kappa"};

struct SpinCoefficients {
    std::array<Jet, 12> u;  // unprimed
    std::array<Jet, 12> p;  // primed
    cplx operator()(Letter l) const { return u[l].value(); }
    cplx primed(Letter l) const { return p[l].value(); }
    double max_abs() const;
};

SpinCoefficients name_spin_coefficients(const ConnectionCoefficients& g);
// Inverse of the naming: rebuilds Gamma_abc from the 24 letters.
ConnectionCoefficients assemble_connection(const SpinCoefficients& s);

struct IntegrabilityTol {
    double rel = 1e-8;
    double threshold(const SpinCoefficients& s) const { return rel * (1.0 + s.max_abs()); }
};

bool is_integrable(const SpinCoefficients& s, const IntegrabilityTol& tol = {});

struct WeylForm {
    A4<Jet> B;
    std::array<bool, 4> determined{true, false, false, true};
};

// B = (2 tau, 2 pi, -2 mu, -2 rho); all four slots determined.
WeylForm canonical_weyl_form(const SpinCoefficients& s, const IntegrabilityTol& tol = {});
// B1 = 2 tau, B4 = -2 rho with caller-chosen B2, B3 (constants).
WeylForm weyl_form(const SpinCoefficients& s, cplx b2, cplx b3, const IntegrabilityTol& tol = {});

// W Gamma_abc = Gamma_abc + 1/2 (g_ca B_b - g_cb B_a + g_ab B_c); torsion free, nabla g = -B g.
ConnectionCoefficients weyl_connection(const ConnectionCoefficients& g, const WeylForm& B);

// Coefficients on (m, k) of the characteristic derivatives. Index 0 = m = e1, 1 = k = e4.
// omega[A][B][C]: nabla_{f_C} f_B = omega[A][B][C] f_A.
struct CharacteristicConnection {
    A4<A4<A4<Jet>>> omega;  // only [0..1] used; kept 4-wide for simple indexing
    const Jet& at(int A, int B, int C) const { return omega[A][B][C]; }
};

CharacteristicConnection characteristic_derivatives(const SpinCoefficients& s, const IntegrabilityTol& tol = {});
// Same coefficients read from the restriction of a Weyl connection preserving N.
CharacteristicConnection restrict_weyl(const ConnectionCoefficients& weyl);

}  // namespace nf
