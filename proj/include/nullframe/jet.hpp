#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace nf {

using cplx = std::complex<double>;

inline constexpr int kVars = 4;
inline constexpr int kMaxOrder = 6;

using MultiIndex = std::array<int, kVars>;

// Number of multi-indices of total degree <= order in four variables.
std::size_t jet_size(int order);

// Graded enumeration shared by all jets: the multi-indices of degree <= n
// are exactly the first jet_size(n) entries, so truncation is a prefix.
const MultiIndex& multi_index(std::size_t slot);
std::size_t slot_of(const MultiIndex& alpha);

// Truncated Taylor expansion of a complex function of x1..x4 about a base
// point. coeff(alpha) = d^alpha f / alpha! at the base point.
class Jet {
public:
    Jet();
    explicit Jet(int order, cplx value = 0.0);

    static Jet variable(int order, int k, double base);

    int order() const { return order_; }
    std::size_t size() const { return c_.size(); }
    cplx value() const { return c_[0]; }

    cplx& operator[](std::size_t slot) { return c_[slot]; }
    const cplx& operator[](std::size_t slot) const { return c_[slot]; }
    cplx coeff(const MultiIndex& alpha) const;

    Jet truncated(int order) const;
    bool is_constant(double tol = 0.0) const;

    // Partial derivative along coordinate k (0-based); the result loses one order.
    Jet derivative(int k) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator+=(cplx s);
    Jet& operator-=(cplx s);
    Jet& operator*=(cplx s);

    friend Jet operator-(Jet a);
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator+(Jet a, cplx s) { return a += s; }
    friend Jet operator+(cplx s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, cplx s) { return a -= s; }
    friend Jet operator-(cplx s, const Jet& a) { return -a + s; }
    friend Jet operator*(Jet a, cplx s) { return a *= s; }
    friend Jet operator*(cplx s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, cplx s) { return a *= (1.0 / s); }

private:
    int order_;
    std::vector<cplx> c_;
};

// Composition with a univariate function given its Taylor coefficients
// d[n] = f^(n)(u0)/n! at u0 = u.value(); d must have at least u.order()+1 entries.
Jet compose(const Jet& u, const std::vector<cplx>& d);

Jet reciprocal(const Jet& u);
Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet sinh(const Jet& u);
Jet cosh(const Jet& u);
Jet sqrt(const Jet& u);
Jet pow(const Jet& u, int n);
Jet conj(const Jet& u);

double max_abs_diff(const Jet& a, const Jet& b);

}  // namespace nf
