#pragma once

#include "nullframe/expr.hpp"
#include "nullframe/jet.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace nf {

template <class T>
using A4 = std::array<T, 4>;
template <class T>
using A44 = A4<A4<T>>;
template <class T>
using A444 = A4<A44<T>>;
template <class T>
using A4444 = A4<A444<T>>;

using Point = std::array<double, 4>;
using CMat4 = A44<cplx>;

enum class Signature { Complex, L, E, Sc, Sr };

std::string to_string(Signature s);
Signature signature_from_string(const std::string& s);

// Frame metric: only g12 = g21 = g34 = g43 = 1 (0-based pairs {0,1} and {2,3}).
inline double gab(int a, int b) { return (a ^ 1) == b ? 1.0 : 0.0; }
// Index partner used to raise or lower one frame index.
inline int partner(int a) { return a ^ 1; }

class DegenerateCoframe : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RealityViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoframeSpec {
    A44<Expr> theta;  // theta[a][mu]: component of M,P,N,K along dx^mu
    Signature signature = Signature::Complex;
    Bindings parameters;
};

inline const std::array<const char*, 4> kCoframeNames{"M", "P", "N", "K"};

CoframeSpec make_spec(const A44<std::string>& components, Signature sig, const Bindings& params = {});
CoframeSpec load_coframe_json(const std::string& text);
std::string coframe_to_json(const CoframeSpec& spec);

struct CoframeEval {
    Point point{};
    int order = 0;
    A44<Jet> theta;  // theta[a][mu]
    A44<Jet> frame;  // frame[a][mu] = e_a^mu, dual frame (m,p,n,k)
    CMat4 theta_value() const;
    CMat4 frame_value() const;
};

struct EvalConfig {
    double degeneracy_tol = 1e-10;
    EvalOptions expr;
};

CoframeEval evaluate_coframe(const CoframeSpec& spec, const Point& p, int order, const EvalConfig& cfg = {});

// Inverse of a matrix of jets (Gauss-Jordan, pivoting on values).
A44<Jet> invert(const A44<Jet>& m);
cplx determinant(const CMat4& m);

// e_a(f) = e_a^mu d_mu f
Jet directional(const CoframeEval& ev, int a, const Jet& f);

CMat4 metric_components(const CoframeEval& ev);

// d theta^a as coordinate components d_mu theta^a_nu - d_nu theta^a_mu
A444<Jet> exterior_derivative(const CoframeEval& ev);

// c[a][b][c] with d theta^a = -1/2 c^a_bc theta^b ^ theta^c, [e_b, e_c] = c^a_bc e_a
struct StructureCoefficients {
    A444<Jet> c;
    cplx value(int a, int b, int cc) const { return c[a][b][cc].value(); }
};

StructureCoefficients structure_coefficients(const CoframeEval& ev);

struct RealityReport {
    bool pass = true;
    double max_residual = 0.0;
    double tolerance = 1e-10;
    std::vector<std::string> violations;
};

RealityReport check_reality(const CoframeEval& ev, Signature sig, double tol = 1e-10);

}  // namespace nf
