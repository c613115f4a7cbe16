#pragma once

#include "nullframe/connection.hpp"
#include "nullframe/frame.hpp"

#include <string>
#include <vector>

namespace nf {

class DecompositionInconsistent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// R_abcd = Omega_ab(e_c, e_d) for any torsion-free connection given in the
// frame: R^a_bcd = e_c(G^a_bd) - e_d(G^a_bc) - G^a_be c^e_cd + G^a_fc G^f_bd - G^a_fd G^f_bc,
// first index lowered with the frame metric. Jets lose one order.
A4444<Jet> curvature_tensor(const CoframeEval& ev, const StructureCoefficients& c, const ConnectionCoefficients& g);

struct Riemann {
    A4444<Jet> R;     // R_abcd
    A44<Jet> ricci;   // R_bd = R^a_bad
    Jet scalar;       // g^bd R_bd
    A44<Jet> P;       // 1/2 R_ab - R g_ab / 12
};

// Ricci, scalar and Schouten of a curvature tensor (works for non-metric connections too).
Riemann contract(const A4444<Jet>& R);
Riemann riemann(const CoframeEval& ev, const StructureCoefficients& c, const ConnectionCoefficients& g);

struct CurvatureScalars {
    std::array<Jet, 5> psi;    // Psi0..Psi4 from the unprimed structure equations
    std::array<Jet, 5> psi_p;  // Psi'0..Psi'4 from the primed ones
    A44<Jet> P;                // Schouten from the unprimed reading
    A44<Jet> P_primed;         // Schouten from the primed reading
    Jet R;                     // scalar curvature 12 (P12 + P34)
    double reading_gap = 0.0;  // largest difference between the two Schouten readings

    cplx Psi(int n) const { return psi[n].value(); }
    cplx PsiP(int n) const { return psi_p[n].value(); }
};

CurvatureScalars decompose(const A4444<Jet>& R, double tol = 1e-8);

// C_abcd = R_abcd + g_ad P_cb - g_ac P_db + g_bc P_da - g_bd P_ca
A4444<cplx> weyl_assemble(const A4444<Jet>& R, const A44<Jet>& P);

// K0(X, Y) = R_abcd X^a Y^b X^c Y^d, so K0(m, k) = Psi0.
cplx K0(const A4444<Jet>& R, const A4<cplx>& X, const A4<cplx>& Y);
cplx contract4(const A4444<cplx>& C, const A4<cplx>& X, const A4<cplx>& Y);

// (nabla_c T)_ab for a 2-tensor
Jet nabla2(const CoframeEval& ev, const ConnectionCoefficients& g, const A44<Jet>& T, int c, int a, int b);
// (nabla_d A)_abc for a 3-tensor
Jet nabla3(const CoframeEval& ev, const ConnectionCoefficients& g, const A444<Jet>& A, int d, int a, int b, int c);

// A_abc = nabla_b P_ca - nabla_c P_ba
A444<Jet> cotton(const CoframeEval& ev, const ConnectionCoefficients& g, const A44<Jet>& P);

// Explicit adapted-frame expressions of A141 and A441 (valid when kappa = sigma = 0).
cplx cotton_141_adapted(const CoframeEval& ev, const SpinCoefficients& s, const A44<Jet>& P);
cplx cotton_441_adapted(const CoframeEval& ev, const SpinCoefficients& s, const A44<Jet>& P);

// S = nabla_4 A141 - nabla_1 A441 + 4 rho A141 + 4 tau A441
cplx s_scalar(const CoframeEval& ev, const ConnectionCoefficients& g, const A444<Jet>& A, const SpinCoefficients& s,
              const IntegrabilityTol& tol = {});
// The same quantity written with frame derivatives of A141 and A441 only.
cplx s_scalar_derivative_form(const CoframeEval& ev, const A444<Jet>& A, const SpinCoefficients& s);

// Everything the identity suites and the Goldberg-Sachs checks need at one point.
struct FrameData {
    CoframeEval ev;
    StructureCoefficients c;
    ConnectionCoefficients gamma;
    SpinCoefficients spin;
    Riemann riemann;
    CurvatureScalars scalars;
    A444<Jet> A;
    bool has_curvature = false;  // coframe order >= 2
    bool has_cotton = false;     // coframe order >= 3
};

FrameData compute_frame_data(const CoframeSpec& spec, const Point& p, int order = 4, const EvalConfig& cfg = {});

struct Residual {
    std::string label;  // np01.., b01.., cotton-A141..
    std::string lhs;    // the quantity on the left-hand side
    cplx value;         // lhs - rhs
    int depth;          // derivative depth of the coframe involved (1..3)
};

std::vector<Residual> np_residuals(const FrameData& d);
std::vector<Residual> bianchi_residuals(const FrameData& d);         // 20 second Bianchi identities
std::vector<Residual> cotton_bianchi_residuals(const FrameData& d);  // 8 compact forms

// graded tolerance by derivative depth
double residual_tolerance(int depth);

}  // namespace nf
