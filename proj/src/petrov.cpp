#include "nullframe/petrov.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nf {

namespace {

using Poly = std::vector<cplx>;  // ascending coefficients

cplx peval(const Poly& p, cplx t) {
    cplx r = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

double pscale(const Poly& p, cplx t) {
    double s = 0.0, tk = 1.0;
    for (const auto& c : p) {
        s += std::abs(c) * tk;
        tk *= std::abs(t);
    }
    return s;
}

Poly pderiv(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * double(k));
    return d;
}

Poly pmul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// roots of a polynomial with nonzero leading coefficient
std::vector<cplx> proots(const Poly& p) {
    const int d = int(p.size()) - 1;
    if (d <= 0) return {};
    if (d == 1) return {-p[0] / p[1]};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -p[i] / p[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> r;
    for (int i = 0; i < d; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

double chordal_affine(cplx a, cplx b) {
    return std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

double psi_max(const PsiSet& psi) {
    double m = 0.0;
    for (const auto& v : psi) m = std::max(m, std::abs(v));
    return m;
}

void check_psi_reality(const PsiSet& psi, Signature tag, const PetrovOptions& opt) {
    // an identically zero quartic carries no reality information
    if (psi_max(psi) <= opt.zero) return;
    const double scale = psi_max(psi);
    double r = 0.0;
    const char* rel = "";
    switch (tag) {
        case Signature::E:
            r = std::max({std::abs(psi[4] - std::conj(psi[0])), std::abs(psi[3] - std::conj(psi[1])),
                          std::abs(psi[2].imag())});
            rel = "Psi4 = conj Psi0, Psi3 = conj Psi1, Psi2 real";
            break;
        case Signature::Sc:
            r = std::max({std::abs(psi[4] - std::conj(psi[0])), std::abs(psi[3] + std::conj(psi[1])),
                          std::abs(psi[2].imag())});
            rel = "Psi4 = conj Psi0, Psi3 = -conj Psi1, Psi2 real";
            break;
        case Signature::Sr:
            for (const auto& v : psi) r = std::max(r, std::abs(v.imag()));
            rel = "all Psi real";
            break;
        default:
            return;
    }
    if (r > opt.reality * scale)
        throw RealityViolated(std::string("Weyl scalars violate ") + rel + " for tag " + to_string(tag) +
                              " (residual " + std::to_string(r / scale) + ")");
}

std::string label_of_partition(const std::vector<int>& p, const char* suffix = "") {
    static const std::vector<std::pair<std::vector<int>, std::string>> table{
        {{1, 1, 1, 1}, "G"}, {{2, 1, 1}, "II"}, {{2, 2}, "D"}, {{3, 1}, "III"}, {{4}, "N"}, {{}, "0"}};
    for (const auto& [k, v] : table)
        if (k == p) return v.empty() || v == "0" ? v : v + suffix;
    return "?";
}

std::vector<int> sorted_partition(std::vector<int> p) {
    std::sort(p.rbegin(), p.rend());
    return p;
}

}  // namespace

BinaryQuartic quartic_from_psi(const PsiSet& psi) {
    return {psi[0], 4.0 * psi[1], 6.0 * psi[2], -4.0 * psi[3], psi[4]};
}

PsiSet psi_from_quartic(const BinaryQuartic& c) {
    return {c[0], c[1] / 4.0, c[2] / 6.0, -c[3] / 4.0, c[4]};
}

cplx evaluate(const BinaryQuartic& c, cplx z, cplx w) {
    cplx r = 0.0;
    for (int k = 0; k <= 4; ++k) r += c[k] * std::pow(z, k) * std::pow(w, 4 - k);
    return r;
}

BinaryQuartic substitute(const BinaryQuartic& F, cplx a, cplx b, cplx c, cplx d) {
    // z = a t + b, w = c t + d with t = Z / W
    BinaryQuartic G{};
    for (int k = 0; k <= 4; ++k) {
        Poly term{F[k]};
        for (int i = 0; i < k; ++i) term = pmul(term, {b, a});
        for (int i = k; i < 4; ++i) term = pmul(term, {d, c});
        for (int j = 0; j <= 4; ++j) G[j] += term[j];
    }
    return G;
}

SpherePoint SpherePoint::from(cplx z, cplx w) {
    const double n = std::sqrt(std::norm(z) + std::norm(w));
    if (n == 0.0) throw std::invalid_argument("(0 : 0) is not a point of the sphere");
    return {z / n, w / n};
}

double chordal(const SpherePoint& a, const SpherePoint& b) { return std::abs(a.z * b.w - b.z * a.w); }

std::vector<int> PrincipalRoots::partition() const {
    std::vector<int> p;
    for (const auto& r : roots) p.push_back(r.multiplicity);
    return sorted_partition(p);
}

PrincipalRoots principal_roots(const PsiSet& psi, const PetrovOptions& opt) {
    PrincipalRoots out;
    if (psi_max(psi) < opt.zero) {
        out.all_zero = true;
        return out;
    }
    const BinaryQuartic F = quartic_from_psi(psi);
    double fnorm = 0.0;
    for (const auto& c : F) fnorm += std::abs(c);

    // rotate so that the point at infinity of the new chart is far from every root
    cplx al = 1.0, ga = 0.0;
    double best = -1.0;
    const int n_try = 24;
    for (int i = 0; i < n_try; ++i) {
        const double th = std::acos(1.0 - 2.0 * (i + 0.5) / n_try);
        const double ph = i * 2.399963229728653;
        const cplx a = std::cos(th / 2), g = std::polar(std::sin(th / 2), ph);
        const double v = std::abs(evaluate(F, a, g));
        if (v > best) {
            best = v;
            al = a;
            ga = g;
        }
    }
    // z = al t - conj(ga), w = ga t + conj(al)
    const BinaryQuartic G = substitute(F, al, -std::conj(ga), ga, std::conj(al));
    const Poly p(G.begin(), G.end());

    std::vector<cplx> remaining = proots(p);
    std::vector<std::pair<cplx, int>> found;

    std::vector<Poly> der{p};
    for (int j = 1; j < 4; ++j) der.push_back(pderiv(der.back()));

    for (int m = 4; m >= 2; --m) {
        for (const cplx& cand : proots(der[m - 1])) {
            if (int(remaining.size()) < m) break;
            bool ok = true;
            for (int j = 0; j < m - 1 && ok; ++j)
                ok = std::abs(peval(der[j], cand)) <= opt.multiplicity * pscale(der[j], cand);
            if (!ok) continue;
            // drop the m computed roots closest to the candidate
            std::sort(remaining.begin(), remaining.end(), [&](cplx x, cplx y) {
                return chordal_affine(x, cand) < chordal_affine(y, cand);
            });
            remaining.erase(remaining.begin(), remaining.begin() + m);
            found.push_back({cand, m});
        }
    }
    // remaining simple roots: polish, then merge any pair closer than the cluster radius
    for (auto& t : remaining) {
        for (int it = 0; it < 3; ++it) {
            const cplx d = peval(der[1], t);
            if (std::abs(d) == 0.0) break;
            t -= peval(p, t) / d;
        }
        bool merged = false;
        for (auto& f : found)
            if (chordal_affine(f.first, t) < opt.cluster) {
                ++f.second;
                merged = true;
                break;
            }
        if (!merged) found.push_back({t, 1});
    }

    for (const auto& [t, m] : found) {
        Root r;
        r.point = SpherePoint::from(al * t - std::conj(ga), ga * t + std::conj(al));
        r.multiplicity = m;
        out.roots.push_back(r);
        out.residual = std::max(out.residual, std::abs(evaluate(F, r.point.z, r.point.w)) / fnorm);
    }
    std::stable_sort(out.roots.begin(), out.roots.end(),
                     [](const Root& a, const Root& b) { return a.multiplicity > b.multiplicity; });
    return out;
}

std::string complex_type(const PrincipalRoots& r) {
    if (r.all_zero) return "0";
    return label_of_partition(r.partition());
}

int real_index(const SpherePoint& p, Signature tag, const PetrovOptions& opt) {
    switch (tag) {
        case Signature::E:
            return 0;
        case Signature::L:
            return 1;
        case Signature::Sc:
            return std::abs(std::norm(p.z) - std::norm(p.w)) < opt.index ? 2 : 0;
        case Signature::Sr:
            return 2.0 * std::abs((p.z * std::conj(p.w)).imag()) < opt.index ? 2 : 0;
        default:
            return -1;
    }
}

SpherePoint paired(const SpherePoint& p, Signature tag) {
    switch (tag) {
        case Signature::E:
            return {-std::conj(p.w), std::conj(p.z)};
        case Signature::Sc:
            return {std::conj(p.w), std::conj(p.z)};
        case Signature::Sr:
            return {std::conj(p.z), std::conj(p.w)};
        default:
            return p;
    }
}

namespace {

void fill_indices(PrincipalRoots& r, Signature tag, const PetrovOptions& opt) {
    for (auto& root : r.roots) root.real_index = real_index(root.point, tag, opt);
}

double pairing_residual(const PrincipalRoots& r, Signature tag) {
    double res = 0.0;
    for (const auto& a : r.roots) {
        const SpherePoint q = paired(a.point, tag);
        double best = 1e300;
        for (const auto& b : r.roots)
            if (b.multiplicity == a.multiplicity) best = std::min(best, chordal(q, b.point));
        res = std::max(res, best);
    }
    return res;
}

}  // namespace

FactorReport euclidean_type(const PsiSet& psi, const PetrovOptions& opt) {
    check_psi_reality(psi, Signature::E, opt);
    FactorReport f;
    f.roots = principal_roots(psi, opt);
    fill_indices(f.roots, Signature::E, opt);
    if (f.roots.all_zero) {
        f.label = f.root_label = "0";
        return f;
    }
    f.pairing_residual = pairing_residual(f.roots, Signature::E);
    const auto part = f.roots.partition();
    if (part == std::vector<int>{1, 1, 1, 1})
        f.label = "G";
    else if (part == std::vector<int>{2, 2})
        f.label = "D";
    else
        f.label = complex_type(f.roots);
    f.root_label = f.label;
    f.consistent = (f.label == "G" || f.label == "D") && f.pairing_residual < opt.index;
    return f;
}

FactorReport split_type(const PsiSet& psi, Signature tag, const PetrovOptions& opt) {
    if (tag != Signature::Sc && tag != Signature::Sr)
        throw std::invalid_argument("split_type needs tag S_c or S_r");
    check_psi_reality(psi, tag, opt);
    FactorReport f;
    f.roots = principal_roots(psi, opt);
    fill_indices(f.roots, tag, opt);
    if (f.roots.all_zero) {
        f.label = f.root_label = "0";
        return f;
    }
    f.pairing_residual = pairing_residual(f.roots, tag);

    int n0 = 0;
    std::vector<int> part0, part2;
    for (const auto& r : f.roots.roots) {
        if (r.real_index == 0) {
            n0 += r.multiplicity;
            part0.push_back(r.multiplicity);
        } else {
            part2.push_back(r.multiplicity);
        }
    }
    part0 = sorted_partition(part0);
    part2 = sorted_partition(part2);
    if (n0 == 4)
        f.root_label = part0 == std::vector<int>{1, 1, 1, 1} ? "G" : part0 == std::vector<int>{2, 2} ? "D" : "?";
    else if (n0 == 2 && part0 == std::vector<int>{1, 1})
        f.root_label = part2 == std::vector<int>{1, 1} ? "SG" : part2 == std::vector<int>{2} ? "II" : "?";
    else if (n0 == 0)
        f.root_label = label_of_partition(part2, "_r");
    else
        f.root_label = "?";

    const BinaryQuartic F = quartic_from_psi(psi);
    if (n0 > 0) {
        // Work in the chart with the S_c pairing z -> 1/conj z.
        BinaryQuartic Fc = F;
        SpherePoint r{};
        for (const auto& root : f.roots.roots)
            if (root.real_index == 0) {
                r = root.point;
                break;
            }
        if (tag == Signature::Sr) {
            // x = i (1 + zeta) / (1 - zeta) sends the unit circle to the real line
            Fc = substitute(F, cplx(0, 1), cplx(0, 1), -1.0, 1.0);
            r = SpherePoint::from(r.z - cplx(0, 1) * r.w, r.z + cplx(0, 1) * r.w);
        }
        if (std::abs(r.z) > std::abs(r.w)) r = paired(r, Signature::Sc);
        const cplx rho = r.z / r.w;
        // SU(1,1) map sending rho to 0 and 1/conj(rho) to infinity
        const PsiSet t = psi_from_quartic(substitute(Fc, 1.0, rho, std::conj(rho), 1.0));
        const double n1 = std::abs(t[1]), n2 = std::abs(t[2]);
        const double norm = 9.0 * n2 * n2 + 16.0 * n1 * n1;
        f.discriminant_kind = "quadratic";
        f.discriminant = norm > 0.0 ? (9.0 * n2 * n2 - 16.0 * n1 * n1) / norm : 0.0;
        f.marginal = std::abs(f.discriminant) <= opt.marginal;
        if (n1 <= std::sqrt(opt.multiplicity) * n2)
            f.label = "D";
        else if (f.marginal)
            f.label = "II";
        else
            f.label = f.discriminant > 0.0 ? "G" : "SG";
    } else {
        // all principal planes have real index two: work with real roots
        BinaryQuartic Fr = F;
        SpherePoint r = f.roots.roots.front().point;
        if (tag == Signature::Sc) {
            // zeta = (x - i) / (x + i)
            Fr = substitute(F, 1.0, cplx(0, -1), 1.0, cplx(0, 1));
            r = SpherePoint::from(cplx(0, 1) * (r.w + r.z), r.w - r.z);
        }
        std::size_t big = 0;
        for (std::size_t k = 1; k < 5; ++k)
            if (std::abs(Fr[k]) > std::abs(Fr[big])) big = k;
        const cplx phase = Fr[big] / std::abs(Fr[big]);
        for (auto& c : Fr) c /= phase;
        // a real point that is not a root goes to infinity
        double s = 0.0, best = -1.0;
        for (double cand : {0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 3.0, -3.0, 0.25}) {
            const double v = std::abs(evaluate(Fr, cand, 1.0)) / std::pow(1.0 + cand * cand, 2);
            if (v > best) {
                best = v;
                s = cand;
            }
        }
        BinaryQuartic H;
        if (r.is_infinity(1e-9))
            H = substitute(Fr, s, 1.0, 1.0, 0.0);  // x = s + 1/y
        else
            H = substitute(Fr, s, -(r.z / r.w).real(), 1.0, -1.0);  // x = (s y - r) / (y - 1)
        const double A = (H[3] / H[4]).real(), B = (H[2] / H[4]).real(), C = (H[1] / H[4]).real();
        const double p = B - A * A / 3.0, q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
        const double denom = 4.0 * std::abs(p * p * p) + 27.0 * q * q;
        f.discriminant_kind = "cubic";
        f.discriminant = denom > 0.0 ? (-4.0 * p * p * p - 27.0 * q * q) / denom : 0.0;
        f.marginal = std::abs(f.discriminant) <= opt.marginal;
        f.label = f.root_label;
        // the cubic keeps one copy of r, so its roots are distinct for {1,1,1,1} and {2,1,1}
        const auto part = f.roots.partition();
        const bool distinct_rest = part == std::vector<int>{1, 1, 1, 1} || part == std::vector<int>{2, 1, 1};
        if (!f.marginal && distinct_rest != (f.discriminant > 0.0)) f.consistent = false;
    }
    f.consistent = f.consistent && f.label == f.root_label && f.pairing_residual < opt.index;
    return f;
}

FactorReport classify(const PsiSet& psi, Signature tag, const PetrovOptions& opt) {
    switch (tag) {
        case Signature::E:
            return euclidean_type(psi, opt);
        case Signature::Sc:
        case Signature::Sr:
            return split_type(psi, tag, opt);
        default: {
            FactorReport f;
            f.roots = principal_roots(psi, opt);
            fill_indices(f.roots, tag, opt);
            f.label = f.root_label = complex_type(f.roots);
            return f;
        }
    }
}

PetrovReport petrov_report(const PsiSet& psi, const PsiSet& psi_primed, Signature tag, const PetrovOptions& opt) {
    PetrovReport r;
    r.signature = tag;
    r.selfdual = classify(psi, tag, opt);
    r.antiselfdual = classify(psi_primed, tag, opt);
    return r;
}

}  // namespace nf
