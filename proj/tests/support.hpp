#pragma once

// Shared fixtures for unit and acceptance tests.

#include "nullframe/catalog.hpp"
#include "nullframe/frame.hpp"
#include "nullframe/gs.hpp"

#include <cstdio>
#include <random>
#include <string>

namespace support {

using nf::cplx;

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Random polynomial of total degree <= deg with complex coefficients of size ~scale.
// Returns the text of p and of conj(p).
struct PolyText {
    std::string p, conj;
};

inline PolyText random_poly(std::mt19937& rng, int deg, double scale, bool real) {
    std::uniform_real_distribution<double> u(-scale, scale);
    PolyText t{"0", "0"};
    for (int d = 1; d <= deg; ++d) {
        for (int term = 0; term < 3; ++term) {
            std::string mono;
            for (int k = 0; k < d; ++k) mono += "*x" + std::to_string(rng() % 4 + 1);
            const double re = u(rng), im = real ? 0.0 : u(rng);
            t.p += " + (" + num(re) + " + " + num(im) + "*i)" + mono;
            t.conj += " + (" + num(re) + " - " + num(im) + "*i)" + mono;
        }
    }
    return t;
}

// A random coframe of the given tag: the flat coframe of that tag plus
// polynomial perturbations that respect the tag's reality conditions.
inline nf::CoframeSpec random_coframe(std::mt19937& rng, nf::Signature tag, int deg = 2, double scale = 0.3) {
    using nf::Signature;
    std::string flat_name = "flat-Sr";
    if (tag == Signature::E) flat_name = "flat-E";
    if (tag == Signature::L) flat_name = "flat-L";
    if (tag == Signature::Sc) flat_name = "flat-Sc";
    const nf::CoframeSpec base = nf::catalog_get(flat_name);
    nf::A44<std::string> comps;
    for (int mu = 0; mu < 4; ++mu) {
        auto b = [&](int a) { return "(" + nf::print(base.theta[a][mu]) + ")"; };
        const bool real = tag == Signature::Sr;
        PolyText m = random_poly(rng, deg, scale, real);
        PolyText n = random_poly(rng, deg, scale, real || tag == Signature::L);
        comps[0][mu] = b(0) + " + " + m.p;
        comps[2][mu] = b(2) + " + " + n.p;
        switch (tag) {
            case Signature::E:
                comps[1][mu] = b(1) + " + " + m.conj;
                comps[3][mu] = b(3) + " + " + n.conj;
                break;
            case Signature::Sc:
                comps[1][mu] = b(1) + " + " + m.conj;
                comps[3][mu] = b(3) + " - (" + n.conj + ")";
                break;
            case Signature::L:
                comps[1][mu] = b(1) + " + " + m.conj;
                comps[3][mu] = b(3) + " + " + random_poly(rng, deg, scale, true).p;
                break;
            default:
                comps[1][mu] = b(1) + " + " + random_poly(rng, deg, scale, real).p;
                comps[3][mu] = b(3) + " + " + random_poly(rng, deg, scale, real).p;
        }
    }
    return nf::make_spec(comps, tag);
}

inline nf::Point random_point(std::mt19937& rng, double half = 0.5) {
    std::uniform_real_distribution<double> u(-half, half);
    return {u(rng), u(rng), u(rng), u(rng)};
}

// Random holomorphic polynomial in z = x1 + i x2, w = x3 + i x4 of degree <= 3.
inline std::string holomorphic(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    std::string f = "0";
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; j + k <= 3; ++k) {
            if (j + k == 0) continue;
            f += " + (" + num(u(rng)) + " + " + num(u(rng)) + "*i)*(x1 + i*x2)^" +
                 std::to_string(j) + "*(x3 + i*x4)^" + std::to_string(k);
        }
    return f;
}

// Integrable coframes: the Kahler-type family with random f, optionally rescaled by a complex factor.
inline nf::CoframeSpec integrable_sample(std::mt19937& rng, bool rescale) {
    nf::CoframeSpec s = nf::catalog_get("counterexample", {{"f", holomorphic(rng)}});
    if (!rescale) return s;
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    const std::string ups = num(u(rng)) + "*x1*x3 + " + num(u(rng)) + "*x2^2 + " +
                            num(u(rng)) + "*x4 + i*" + num(u(rng)) + "*x1";
    s = nf::conformal_rescale(s, nf::parse(ups));
    s.signature = nf::Signature::Complex;
    return s;
}

}  // namespace support
