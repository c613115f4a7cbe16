#pragma once

#include "nullframe/frame.hpp"

#include <array>
#include <string>
#include <vector>

namespace nf {

using PsiSet = std::array<cplx, 5>;  // Psi0..Psi4

// Binary quartic sum_k c[k] z^k w^(4-k); from Psi: c = (Psi0, 4 Psi1, 6 Psi2, -4 Psi3, Psi4).
using BinaryQuartic = std::array<cplx, 5>;
BinaryQuartic quartic_from_psi(const PsiSet& psi);
PsiSet psi_from_quartic(const BinaryQuartic& c);
cplx evaluate(const BinaryQuartic& c, cplx z, cplx w);
// F(a Z + b W, c Z + d W)
BinaryQuartic substitute(const BinaryQuartic& F, cplx a, cplx b, cplx c, cplx d);

// Point (z : w) of the Riemann sphere, normalised to |z|^2 + |w|^2 = 1.
struct SpherePoint {
    cplx z = 0.0, w = 1.0;
    static SpherePoint from(cplx z, cplx w);
    static SpherePoint affine(cplx z) { return from(z, 1.0); }
    bool is_infinity(double tol = 1e-12) const { return std::abs(w) < tol; }
    cplx value() const { return z / w; }
};
double chordal(const SpherePoint& a, const SpherePoint& b);

struct PetrovOptions {
    double cluster = 1e-6;        // chordal distance below which roots merge
    double multiplicity = 1e-9;   // relative size of F, F', .. accepted as zero at a multiple root
    double zero = 1e-9;           // max |Psi| below which the quartic is identically zero
    double index = 1e-6;          // distance to the real-index-two locus
    double reality = 1e-8;        // relative tolerance of the Psi reality relations
    double marginal = 1e-8;       // normalised discriminant treated as zero
};

struct Root {
    SpherePoint point;
    int multiplicity = 1;
    int real_index = -1;  // -1 for complex metrics
};

struct PrincipalRoots {
    std::vector<Root> roots;  // sorted by decreasing multiplicity
    bool all_zero = false;
    double residual = 0.0;    // max |F(root)| / sum |c_k|
    std::vector<int> partition() const;
};

PrincipalRoots principal_roots(const PsiSet& psi, const PetrovOptions& opt = {});

// G, II, D, III, N or 0 from the multiplicity partition.
std::string complex_type(const PrincipalRoots& r);

// E: 0, L: 1, S_c: 2 iff |z| = 1, S_r: 2 iff z is real or infinite. -1 for complex metrics.
int real_index(const SpherePoint& p, Signature tag, const PetrovOptions& opt = {});
// Image of a root under the pairing of the reality conditions (E: -1/conj z, S_c: 1/conj z, S_r: conj z).
SpherePoint paired(const SpherePoint& p, Signature tag);

struct FactorReport {
    std::string label;
    PrincipalRoots roots;
    bool marginal = false;          // discriminant within PetrovOptions::marginal of zero
    std::string discriminant_kind;  // "quadratic", "cubic" or empty
    double discriminant = 0.0;      // normalised: 9 Psi2^2 - 16 |Psi1|^2 or -4 p^3 - 27 q^2
    std::string root_label;         // label read off the root multiplicities and indices alone
    bool consistent = true;         // label agrees with root_label and the pairing closes
    double pairing_residual = 0.0;
};

// Throw RealityViolated when the Psi do not satisfy the relations of the tag.
FactorReport euclidean_type(const PsiSet& psi, const PetrovOptions& opt = {});
FactorReport split_type(const PsiSet& psi, Signature tag, const PetrovOptions& opt = {});
FactorReport classify(const PsiSet& psi, Signature tag, const PetrovOptions& opt = {});

struct PetrovReport {
    Signature signature = Signature::Complex;
    FactorReport selfdual;
    FactorReport antiselfdual;
};

PetrovReport petrov_report(const PsiSet& psi, const PsiSet& psi_primed, Signature tag, const PetrovOptions& opt = {});

}  // namespace nf
