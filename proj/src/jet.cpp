#include "nullframe/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace nf {

namespace {

struct Tables {
    std::vector<MultiIndex> index;
    std::vector<int> degree;
    std::map<MultiIndex, std::size_t> lookup;
    std::array<std::size_t, kMaxOrder + 2> size_upto{};
    // add[i * n + j]: slot of index[i] + index[j], valid when the degrees fit
    std::vector<int> add;
    std::array<std::vector<int>, kVars> up;

    Tables() {
        for (int d = 0; d <= kMaxOrder; ++d) {
            for (int a = d; a >= 0; --a)
                for (int b = d - a; b >= 0; --b)
                    for (int c = d - a - b; c >= 0; --c) {
                        MultiIndex m{a, b, c, d - a - b - c};
                        lookup[m] = index.size();
                        index.push_back(m);
                        degree.push_back(d);
                    }
            size_upto[d] = index.size();
        }
        const std::size_t n = index.size();
        add.assign(n * n, -1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (degree[i] + degree[j] > kMaxOrder) continue;
                MultiIndex s;
                for (int k = 0; k < kVars; ++k) s[k] = index[i][k] + index[j][k];
                add[i * n + j] = static_cast<int>(lookup.at(s));
            }
        for (int k = 0; k < kVars; ++k) {
            up[k].assign(n, -1);
            for (std::size_t i = 0; i < n; ++i) {
                if (degree[i] == kMaxOrder) continue;
                MultiIndex s = index[i];
                ++s[k];
                up[k][i] = static_cast<int>(lookup.at(s));
            }
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

void check_order(int order) {
    if (order < 0 || order > kMaxOrder) throw std::out_of_range("jet order out of range [0,6]");
}

}  // namespace

std::size_t jet_size(int order) {
    check_order(order);
    return tables().size_upto[order];
}

const MultiIndex& multi_index(std::size_t slot) { return tables().index.at(slot); }

std::size_t slot_of(const MultiIndex& alpha) { return tables().lookup.at(alpha); }

Jet::Jet() : order_(0), c_(1, 0.0) {}

Jet::Jet(int order, cplx value) : order_(order), c_(jet_size(order), 0.0) { c_[0] = value; }

Jet Jet::variable(int order, int k, double base) {
    Jet j(order, base);
    if (order >= 1) j.c_[1 + k] = 1.0;
    return j;
}

cplx Jet::coeff(const MultiIndex& alpha) const {
    const std::size_t s = slot_of(alpha);
    if (s >= c_.size()) throw std::out_of_range("multi-index beyond jet order");
    return c_[s];
}

Jet Jet::truncated(int order) const {
    if (order >= order_) return *this;
    Jet r(order);
    std::copy_n(c_.begin(), r.c_.size(), r.c_.begin());
    return r;
}

bool Jet::is_constant(double tol) const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (std::abs(c_[i]) > tol) return false;
    return true;
}

Jet Jet::derivative(int k) const {
    if (order_ == 0) throw std::logic_error("derivative of an order-0 jet");
    const auto& t = tables();
    Jet r(order_ - 1);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        const auto& a = t.index[i];
        r.c_[i] = static_cast<double>(a[k] + 1) * c_[t.up[k][i]];
    }
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }

Jet& Jet::operator+=(cplx s) {
    c_[0] += s;
    return *this;
}

Jet& Jet::operator-=(cplx s) {
    c_[0] -= s;
    return *this;
}

Jet& Jet::operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
}

Jet operator-(Jet a) {
    for (auto& v : a.c_) v = -v;
    return a;
}

Jet operator*(const Jet& a, const Jet& b) {
    const auto& t = tables();
    const int n = std::min(a.order_, b.order_);
    const std::size_t stride = t.index.size();
    Jet r(n);
    r.c_[0] = 0.0;
    const std::size_t na = jet_size(n);
    for (std::size_t i = 0; i < na; ++i) {
        const cplx ai = a.c_[i];
        if (ai == 0.0) continue;
        const std::size_t nb = t.size_upto[n - t.degree[i]];
        const int* row = &t.add[i * stride];
        for (std::size_t j = 0; j < nb; ++j) r.c_[row[j]] += ai * b.c_[j];
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet compose(const Jet& u, const std::vector<cplx>& d) {
    const int n = u.order();
    if (d.size() < static_cast<std::size_t>(n + 1)) throw std::invalid_argument("compose: too few coefficients");
    Jet h = u;
    h[0] = 0.0;
    Jet r(n, d[0]);
    Jet hp = h;
    for (int k = 1; k <= n; ++k) {
        r += hp * d[k];
        if (k < n) hp = hp * h;
    }
    return r;
}

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Jet reciprocal(const Jet& u) {
    const cplx u0 = u.value();
    if (u0 == 0.0) throw std::domain_error("reciprocal of a jet with zero value");
    std::vector<cplx> d(u.order() + 1);
    cplx p = 1.0 / u0;
    for (int k = 0; k <= u.order(); ++k) {
        d[k] = (k % 2 ? -1.0 : 1.0) * p;
        p /= u0;
    }
    return compose(u, d);
}

Jet exp(const Jet& u) {
    const cplx e = std::exp(u.value());
    std::vector<cplx> d(u.order() + 1);
    for (int k = 0; k <= u.order(); ++k) d[k] = e / factorial(k);
    return compose(u, d);
}

Jet log(const Jet& u) {
    const cplx u0 = u.value();
    if (u0 == 0.0) throw std::domain_error("log of a jet with zero value");
    std::vector<cplx> d(u.order() + 1);
    d[0] = std::log(u0);
    cplx p = 1.0;
    for (int k = 1; k <= u.order(); ++k) {
        p /= u0;
        d[k] = (k % 2 ? 1.0 : -1.0) * p / static_cast<double>(k);
    }
    return compose(u, d);
}

namespace {

// derivatives of sin/cos/sinh/cosh cycle with period 4 or 2
Jet trig_like(const Jet& u, const std::array<cplx, 4>& cycle) {
    std::vector<cplx> d(u.order() + 1);
    for (int k = 0; k <= u.order(); ++k) d[k] = cycle[k % 4] / factorial(k);
    return compose(u, d);
}

}  // namespace

Jet sin(const Jet& u) {
    const cplx s = std::sin(u.value()), c = std::cos(u.value());
    return trig_like(u, {s, c, -s, -c});
}

Jet cos(const Jet& u) {
    const cplx s = std::sin(u.value()), c = std::cos(u.value());
    return trig_like(u, {c, -s, -c, s});
}

Jet sinh(const Jet& u) {
    const cplx s = std::sinh(u.value()), c = std::cosh(u.value());
    return trig_like(u, {s, c, s, c});
}

Jet cosh(const Jet& u) {
    const cplx s = std::sinh(u.value()), c = std::cosh(u.value());
    return trig_like(u, {c, s, c, s});
}

Jet sqrt(const Jet& u) {
    const cplx u0 = u.value();
    if (u0 == 0.0) throw std::domain_error("sqrt of a jet with zero value");
    std::vector<cplx> d(u.order() + 1);
    // binom(1/2, k) * u0^(1/2 - k)
    cplx term = std::sqrt(u0);
    double binom = 1.0;
    for (int k = 0; k <= u.order(); ++k) {
        d[k] = binom * term;
        binom *= (0.5 - k) / (k + 1.0);
        term /= u0;
    }
    return compose(u, d);
}

Jet pow(const Jet& u, int n) {
    if (n < 0) return reciprocal(pow(u, -n));
    Jet r(u.order(), 1.0);
    Jet b = u;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return r;
}

Jet conj(const Jet& u) {
    Jet r = u;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::conj(r[i]);
    return r;
}

double max_abs_diff(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace nf
