#pragma once

#include "nullframe/curvature.hpp"
#include "nullframe/petrov.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nf {

// theta^a -> e^Upsilon theta^a
CoframeSpec conformal_rescale(const CoframeSpec& spec, const Expr& upsilon);

struct GSTolerances {
    double rel = 1e-8;       // relative zero for curvature and Cotton components
    double identity = 1e-7;  // relative tolerance of the identity chain
};

// A vanishing condition on a few frame components. `residual` is the largest
// component value; `local_residual` also includes first coordinate derivatives,
// which is what the implications between conditions need at a single point.
struct Condition {
    std::string name;
    std::vector<std::pair<std::string, cplx>> components;
    double residual = 0.0;
    double local_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool pass_local = false;
};

struct DegeneracyFlags {
    Condition integrable;         // kappa, sigma
    Condition ric_degenerate;     // P11, P14, P44
    Condition einstein;           // P11 P14 P44 P13 P22 P23 P24 P33, P12 - P34
    Condition cotton_degenerate;  // A141, A441
    Condition alg_special;        // Psi0, Psi1
    Condition cotton_cross;        // A341, A214
    Condition cotton_strong;        // A114, A414, A341, A214, A123, A423
    // A112 - A134 - 2 A341 and A412 - A434 - 2 A214, identically zero
    cplx cotton_identity_m = 0.0, cotton_identity_k = 0.0;
};

DegeneracyFlags degeneracy_checks(const FrameData& d, const GSTolerances& tol = {});

struct CharacteristicCurvature {
    std::array<cplx, 2> torsion{};        // T(m,k) on m and k
    std::array<cplx, 2> torsion_out{};    // components of [m,k] off N (zero iff integrable)
    std::array<std::array<cplx, 2>, 2> R{};  // R(m,k) f_B = R[A][B] f_A
    cplx scalar = 0.0;                     // 1/2 trace, equal to 4 Psi1
    cplx ricci_mk = 0.0;                   // R_AB = ricci_mk eps_AB
    double identity_residual = 0.0;        // |R(m,k) - scalar Id|
};

CharacteristicCurvature characteristic_curvature(const FrameData& d, const IntegrabilityTol& tol = {});
// Coefficient c in nabla_[C nabla_D] R_AB = c eps_AB eps_CD.
cplx second_curvature_identity(const FrameData& d, const IntegrabilityTol& tol = {});
// W nabla_4 W A_141 - W nabla_1 W A_441 for the Weyl connection with B = (2 tau, 2 pi, -2 mu, -2 rho).
cplx hermitian_weyl_identity(const FrameData& d, const IntegrabilityTol& tol = {});

struct Implication {
    std::string name;     // e.g. "(0)&(i)=>(ii)"
    bool applies = false;  // both hypotheses hold locally (and Psi2 != 0 where required)
    bool holds = true;
    double residual = 0.0;  // residual of the conclusion
};

struct IdentityCheck {
    std::string name;
    cplx value = 0.0;
    cplx expected = 0.0;
    double residual = 0.0;  // relative
    double tolerance = 0.0;
    bool pass = true;
};

struct GSReport {
    Point point{};
    DegeneracyFlags flags;
    bool psi2_nonzero = false;  // II-genericity proxy
    bool psi3_nonzero = false;  // III-genericity proxy
    bool psi4_nonzero = false;  // N-genericity proxy
    std::optional<cplx> S;
    std::optional<CharacteristicCurvature> characteristic;
    std::vector<IdentityCheck> identities;
    std::vector<Implication> implications;
    // sigma Psi2 and kappa Psi2 when the Einstein and algebraic-speciality flags hold
    std::optional<std::pair<cplx, cplx>> sigma_kappa_psi2;
    std::vector<std::string> failures;  // hard failures: an implication that does not close
    bool consistent() const { return failures.empty(); }
};

GSReport gs_verdict(const FrameData& d, const GSTolerances& tol = {});

struct RescaleCheck {
    cplx upsilon = 0.0;
    double a141_law = 0.0;   // |A^141 - e^{-3U}(A141 - Psi1 delta U)|
    double a441_law = 0.0;   // |A^441 - e^{-3U}(A441 - Psi1 D U)|
    double s_law = 0.0;  // |S^ - e^{-4U} S| / (1 + |S|), -1 when S is not defined
    double psi_law = 0.0;   // max |Psi^_n - e^{-2U} Psi_n|
    double roots = 0.0;     // largest chordal distance between matched principal roots
    bool integrable_preserved = true;
};

// Both frame data at the same point; `hat` is the rescaled coframe.
RescaleCheck rescale_check(const FrameData& base, const FrameData& hat, const Expr& upsilon);

// n quasi-random points in the box [lo, hi]: Halton sequence with a seeded shift.
std::vector<Point> sample_points(const Point& lo, const Point& hi, int n, unsigned seed);

}  // namespace nf
