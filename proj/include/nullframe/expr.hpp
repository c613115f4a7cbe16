#pragma once

#include "nullframe/jet.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nf {

enum class Op { Num, ImagUnit, Var, Param, Neg, Add, Sub, Mul, Div, Pow, Func };
enum class Fn { Exp, Log, Sin, Cos, Sinh, Cosh, Sqrt };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    Op op;
    double num = 0.0;     // Num
    int var = 0;          // Var: 0..3 for x1..x4
    std::string name;     // Param
    cplx value = 0.0;     // Param
    int exponent = 0;     // Pow
    Fn fn = Fn::Exp;      // Func
    Expr lhs, rhs;        // operands; unary nodes use lhs
};

using Bindings = std::map<std::string, cplx>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what);
    std::size_t offset() const { return offset_; }  // 1-based byte offset
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownIdentifier : public std::runtime_error {
public:
    UnknownIdentifier(std::string ident, std::size_t offset, std::vector<std::string> bound);
    const std::string& identifier() const { return ident_; }
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& bound_names() const { return bound_; }

private:
    std::string ident_;
    std::size_t offset_;
    std::vector<std::string> bound_;
};

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Names that can never be parameters.
bool is_reserved_name(const std::string& s);

Expr parse(const std::string& text, const Bindings& params = {});
std::string print(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

Expr make_num(double v);
Expr make_imag();
Expr make_var(int k);
Expr make_param(const std::string& name, cplx v);
Expr make_unary(Op op, Expr a);
Expr make_binary(Op op, Expr a, Expr b);
Expr make_pow(Expr a, int n);
Expr make_func(Fn f, Expr a);

struct EvalOptions {
    double denominator_floor = 1e-14;
};

Jet eval_jet(const Expr& e, const std::array<double, 4>& point, int order, const EvalOptions& opt = {});

// Complex conjugate of an expression in the real coordinates: i -> -i and each
// parameter p -> p_bar (bound to conj(p)). Principal branches of log and sqrt
// commute with conjugation away from the negative real axis.
Expr conjugate(const Expr& e);

Jet apply_function(Fn f, const Jet& u);
const char* function_name(Fn f);

}  // namespace nf
