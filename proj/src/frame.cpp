#include "nullframe/frame.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace nf {

std::string to_string(Signature s) {
    switch (s) {
        case Signature::Complex: return "Complex";
        case Signature::L: return "L";
        case Signature::E: return "E";
        case Signature::Sc: return "S_c";
        case Signature::Sr: return "S_r";
    }
    return "?";
}

Signature signature_from_string(const std::string& s) {
    if (s == "Complex" || s == "C") return Signature::Complex;
    if (s == "L") return Signature::L;
    if (s == "E") return Signature::E;
    if (s == "S_c" || s == "Sc") return Signature::Sc;
    if (s == "S_r" || s == "Sr") return Signature::Sr;
    throw SpecError("unknown signature '" + s + "' (expected Complex, L, E, S_c or S_r)");
}

CoframeSpec make_spec(const A44<std::string>& components, Signature sig, const Bindings& params) {
    CoframeSpec spec;
    spec.signature = sig;
    spec.parameters = params;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) spec.theta[a][mu] = parse(components[a][mu], params);
    return spec;
}

namespace {

cplx json_complex(const nlohmann::json& v, const std::string& what) {
    if (v.is_number()) return v.get<double>();
    if (v.is_object() && v.contains("re")) return {v.at("re").get<double>(), v.value("im", 0.0)};
    if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
    throw SpecError(what + ": expected a number, [re, im] or {\"re\": .., \"im\": ..}");
}

}  // namespace

CoframeSpec load_coframe_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("coframe file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coframe")) throw SpecError("coframe file: missing \"coframe\" object");
    Signature sig = Signature::Complex;
    if (j.contains("signature")) sig = signature_from_string(j.at("signature").get<std::string>());
    Bindings params;
    if (j.contains("parameters")) {
        for (const auto& [k, v] : j.at("parameters").items()) {
            if (is_reserved_name(k)) throw SpecError("parameter name '" + k + "' is reserved");
            params[k] = json_complex(v, "parameter " + k);
        }
    }
    A44<std::string> comps;
    const auto& cf = j.at("coframe");
    for (int a = 0; a < 4; ++a) {
        const char* name = kCoframeNames[a];
        if (!cf.contains(name)) throw SpecError(std::string("coframe: missing 1-form ") + name);
        const auto& row = cf.at(name);
        if (!row.is_array() || row.size() != 4) throw SpecError(std::string("coframe.") + name + ": expected 4 expressions");
        for (int mu = 0; mu < 4; ++mu) {
            if (row[mu].is_number())
                comps[a][mu] = row[mu].dump();
            else
                comps[a][mu] = row[mu].get<std::string>();
        }
    }
    return make_spec(comps, sig, params);
}

std::string coframe_to_json(const CoframeSpec& spec) {
    nlohmann::ordered_json j;
    j["signature"] = to_string(spec.signature);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : spec.parameters) params[k] = {{"re", v.real()}, {"im", v.imag()}};
    j["parameters"] = params;
    nlohmann::ordered_json cf = nlohmann::ordered_json::object();
    for (int a = 0; a < 4; ++a) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int mu = 0; mu < 4; ++mu) row.push_back(print(spec.theta[a][mu]));
        cf[kCoframeNames[a]] = row;
    }
    j["coframe"] = cf;
    return j.dump(2);
}

CMat4 CoframeEval::theta_value() const {
    CMat4 m;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) m[a][mu] = theta[a][mu].value();
    return m;
}

CMat4 CoframeEval::frame_value() const {
    CMat4 m;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) m[a][mu] = frame[a][mu].value();
    return m;
}

cplx determinant(const CMat4& m0) {
    CMat4 m = m0;
    cplx det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const cplx f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

A44<Jet> invert(const A44<Jet>& m) {
    const int order = m[0][0].order();
    A44<Jet> a = m;
    A44<Jet> inv;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) inv[r][c] = Jet(order, r == c ? 1.0 : 0.0);
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col].value()) > std::abs(a[piv][col].value())) piv = r;
        if (a[piv][col].value() == 0.0) throw DegenerateCoframe("singular coframe matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Jet r = reciprocal(a[col][col]);
        for (int c = 0; c < 4; ++c) {
            a[col][c] = a[col][c] * r;
            inv[col][c] = inv[col][c] * r;
        }
        for (int row = 0; row < 4; ++row) {
            if (row == col) continue;
            const Jet f = a[row][col];
            if (f.is_constant() && f.value() == 0.0) continue;
            for (int c = 0; c < 4; ++c) {
                a[row][c] -= f * a[col][c];
                inv[row][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

CoframeEval evaluate_coframe(const CoframeSpec& spec, const Point& p, int order, const EvalConfig& cfg) {
    if (order < 1 || order > kMaxOrder) throw std::out_of_range("coframe jet order must lie in [1,6]");
    CoframeEval ev;
    ev.point = p;
    ev.order = order;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) ev.theta[a][mu] = eval_jet(spec.theta[a][mu], p, order, cfg.expr);

    const CMat4 t = ev.theta_value();
    double rowmax = 0.0;
    for (const auto& row : t) {
        double s = 0.0;
        for (const auto& v : row) s += std::norm(v);
        rowmax = std::max(rowmax, std::sqrt(s));
    }
    const cplx det = determinant(t);
    if (!(std::abs(det) >= cfg.degeneracy_tol * std::pow(rowmax, 4)) || rowmax == 0.0)
        throw DegenerateCoframe("coframe is degenerate at the point (|det| = " + std::to_string(std::abs(det)) + ")");

    // e_a^mu theta^b_mu = delta: frame = (theta^T)^-1
    A44<Jet> tt;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) tt[mu][a] = ev.theta[a][mu];
    ev.frame = invert(tt);
    return ev;
}

Jet directional(const CoframeEval& ev, int a, const Jet& f) {
    Jet r = ev.frame[a][0] * f.derivative(0);
    for (int mu = 1; mu < 4; ++mu) r += ev.frame[a][mu] * f.derivative(mu);
    return r;
}

CMat4 metric_components(const CoframeEval& ev) {
    const CMat4 t = ev.theta_value();
    CMat4 g{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            g[mu][nu] = t[0][mu] * t[1][nu] + t[1][mu] * t[0][nu] + t[2][mu] * t[3][nu] + t[3][mu] * t[2][nu];
    return g;
}

A444<Jet> exterior_derivative(const CoframeEval& ev) {
    A444<Jet> d;
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                d[a][mu][nu] = ev.theta[a][nu].derivative(mu) - ev.theta[a][mu].derivative(nu);
    return d;
}

StructureCoefficients structure_coefficients(const CoframeEval& ev) {
    const A444<Jet> d = exterior_derivative(ev);
    StructureCoefficients s;
    const int n = ev.order - 1;
    for (int a = 0; a < 4; ++a) {
        // half[b][nu] = e_b^mu d theta^a_{mu nu}
        A44<Jet> half;
        for (int b = 0; b < 4; ++b)
            for (int nu = 0; nu < 4; ++nu) {
                Jet acc(n);
                for (int mu = 0; mu < 4; ++mu) acc += ev.frame[b][mu] * d[a][mu][nu];
                half[b][nu] = acc;
            }
        for (int b = 0; b < 4; ++b) {
            s.c[a][b][b] = Jet(n);
            for (int c = b + 1; c < 4; ++c) {
                Jet acc(n);
                for (int nu = 0; nu < 4; ++nu) acc += half[b][nu] * ev.frame[c][nu];
                s.c[a][b][c] = -acc;
                s.c[a][c][b] = acc;
            }
        }
    }
    return s;
}

RealityReport check_reality(const CoframeEval& ev, Signature sig, double tol) {
    RealityReport rep;
    rep.tolerance = tol;
    if (sig == Signature::Complex) return rep;
    const CMat4 t = ev.theta_value();
    double scale = 1.0;
    for (const auto& row : t)
        for (const auto& v : row) scale = std::max(scale, std::abs(v));

    auto note = [&](const std::string& what, double r) {
        r /= scale;
        rep.max_residual = std::max(rep.max_residual, r);
        if (r > tol) {
            rep.pass = false;
            rep.violations.push_back(what + " (residual " + std::to_string(r) + ")");
        }
    };
    auto conj_rel = [&](int a, int b, double sign, const std::string& what) {
        double r = 0.0;
        for (int mu = 0; mu < 4; ++mu) r = std::max(r, std::abs(t[b][mu] - sign * std::conj(t[a][mu])));
        note(what, r);
    };
    auto real_rel = [&](int a, const std::string& what) {
        double r = 0.0;
        for (int mu = 0; mu < 4; ++mu) r = std::max(r, std::abs(t[a][mu].imag()));
        note(what, r);
    };

    switch (sig) {
        case Signature::E:
            conj_rel(0, 1, 1.0, "P = conj(M)");
            conj_rel(2, 3, 1.0, "K = conj(N)");
            break;
        case Signature::Sc:
            conj_rel(0, 1, 1.0, "P = conj(M)");
            conj_rel(2, 3, -1.0, "K = -conj(N)");
            break;
        case Signature::L:
            conj_rel(0, 1, 1.0, "P = conj(M)");
            real_rel(2, "N real");
            real_rel(3, "K real");
            break;
        case Signature::Sr:
            for (int a = 0; a < 4; ++a) real_rel(a, std::string(kCoframeNames[a]) + " real");
            break;
        case Signature::Complex: break;
    }
    const CMat4 g = metric_components(ev);
    double gi = 0.0;
    for (const auto& row : g)
        for (const auto& v : row) gi = std::max(gi, std::abs(v.imag()));
    note("metric components real", gi / scale);
    return rep;
}

}  // namespace nf
