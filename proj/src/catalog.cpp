#include "nullframe/catalog.hpp"

#include <algorithm>

namespace nf {

namespace {

A44<std::string> flat_components(Signature tag) {
    switch (tag) {
        case Signature::E:
            // M = dw-bar, P = dw, N = dz, K = dz-bar
            return {{{"0", "0", "1", "-i"}, {"0", "0", "1", "i"}, {"1", "i", "0", "0"}, {"1", "-i", "0", "0"}}};
        case Signature::L: {
            const std::string r = "sqrt(0.5)";
            return {{{r, "i*" + r, "0", "0"},
                     {r, "-i*" + r, "0", "0"},
                     {"0", "0", r, r},
                     {"0", "0", r, "-" + r}}};
        }
        case Signature::Sc:
            return {{{"1", "i", "0", "0"}, {"1", "-i", "0", "0"}, {"0", "0", "1", "i"}, {"0", "0", "-1", "i"}}};
        case Signature::Sr:
        case Signature::Complex:
            return {{{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}};
    }
    return {};
}

CoframeSpec flat(Signature tag) { return make_spec(flat_components(tag), tag); }

// spec with every component of 1-form a multiplied by factor[a]
CoframeSpec scaled(CoframeSpec spec, const A4<Expr>& factor) {
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) {
            if (!factor[a]) continue;
            const Expr& c = spec.theta[a][mu];
            if (c->op == Op::Num && c->num == 0.0) continue;
            spec.theta[a][mu] = make_binary(Op::Mul, factor[a], c);
        }
    return spec;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"flat-E", Signature::E, "flat Euclidean coframe dw-bar, dw, dz, dz-bar", {}, {}, "all spin coefficients and curvature vanish"},
        {"flat-L", Signature::L, "flat Lorentzian null coframe", {}, {}, "all spin coefficients and curvature vanish"},
        {"flat-Sr", Signature::Sr, "flat split coframe dx1..dx4 (all real)", {}, {}, "all spin coefficients and curvature vanish"},
        {"flat-Sc", Signature::Sc, "flat split coframe with K = -conj(N)", {}, {}, "all spin coefficients and curvature vanish"},
        {"counterexample", Signature::E,
         "Kahler-type Euclidean coframe M = dw-bar, P = dw, N = e^f dz, K = e^conj(f) dz-bar, z = x1 + i x2, w = x3 + i x4",
         {{"f", kDefaultCounterexampleF}}, {},
         "f holomorphic: kappa = sigma = 0; alpha = -pi/2 = beta' = -tau'/2 = f_w/4; Psi3 = conj(Psi1) = e^-f f_wz/4; "
         "all other Psi and all Psi' vanish; selfdual type G, antiselfdual type 0"},
        {"conformally-flat", Signature::E, "e^upsilon times the flat coframe of the given tag",
         {{"tag", "E"}}, {"upsilon"}, "all Psi and Psi' vanish"},
        {"pp-special", Signature::E,
         "product of flat C with a curved surface: M = dw-bar, P = dw, N = e^(h/2) dz, K = e^(h/2) dz-bar, h real in x1, x2",
         {{"h", "x1^2"}}, {},
         "kappa = sigma = 0, Psi0 = Psi1 = 0, Psi2 proportional to the surface curvature; algebraically special"},
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    std::string known;
    for (const auto& e : catalog_entries()) known += (known.empty() ? "" : ", ") + e.name;
    throw CatalogError("unknown catalog entry '" + name + "' (known: " + known + ")");
}

CoframeSpec catalog_get(const std::string& name, const CatalogParams& given) {
    const CatalogEntry& entry = catalog_entry(name);
    CatalogParams p = entry.defaults;
    for (const auto& [k, v] : given) {
        const bool known = entry.defaults.count(k) ||
                           std::find(entry.required.begin(), entry.required.end(), k) != entry.required.end();
        if (!known) throw CatalogError("catalog entry '" + name + "' has no parameter '" + k + "'");
        p[k] = v;
    }
    for (const auto& r : entry.required)
        if (!p.count(r)) throw CatalogError("catalog entry '" + name + "' requires parameter '" + r + "'");

    if (name == "flat-E") return flat(Signature::E);
    if (name == "flat-L") return flat(Signature::L);
    if (name == "flat-Sr") return flat(Signature::Sr);
    if (name == "flat-Sc") return flat(Signature::Sc);
    if (name == "counterexample") {
        const Expr f = parse(p.at("f"));
        return scaled(flat(Signature::E), {nullptr, nullptr, make_func(Fn::Exp, f), make_func(Fn::Exp, conjugate(f))});
    }
    if (name == "conformally-flat") {
        const Signature tag = signature_from_string(p.at("tag"));
        const Expr e = make_func(Fn::Exp, parse(p.at("upsilon")));
        return scaled(flat(tag), {e, e, e, e});
    }
    if (name == "pp-special") {
        const Expr e = make_func(Fn::Exp, make_binary(Op::Mul, make_num(0.5), parse(p.at("h"))));
        return scaled(flat(Signature::E), {nullptr, nullptr, e, e});
    }
    throw CatalogError("catalog entry '" + name + "' has no generator");
}

}  // namespace nf
