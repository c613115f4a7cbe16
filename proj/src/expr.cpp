#include "nullframe/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

namespace nf {

namespace {

const std::map<std::string, Fn>& function_table() {
    static const std::map<std::string, Fn> t{{"exp", Fn::Exp},   {"log", Fn::Log},   {"sin", Fn::Sin},
                                             {"cos", Fn::Cos},   {"sinh", Fn::Sinh}, {"cosh", Fn::Cosh},
                                             {"sqrt", Fn::Sqrt}};
    return t;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what +
                         (expected.empty() ? "" : " (expected one of: " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::string ident, std::size_t offset, std::vector<std::string> bound)
    : std::runtime_error("unknown identifier '" + ident + "' at offset " + std::to_string(offset) +
                         " (bound names: " + (bound.empty() ? std::string("none") : join(bound)) + ")"),
      ident_(std::move(ident)),
      offset_(offset),
      bound_(std::move(bound)) {}

bool is_reserved_name(const std::string& s) {
    return s == "i" || s == "x1" || s == "x2" || s == "x3" || s == "x4" || function_table().count(s) > 0;
}

const char* function_name(Fn f) {
    for (const auto& [k, v] : function_table())
        if (v == f) return k.c_str();
    return "?";
}

Expr make_num(double v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Num;
    n->num = v;
    return n;
}

Expr make_imag() {
    auto n = std::make_shared<Node>();
    n->op = Op::ImagUnit;
    return n;
}

Expr make_var(int k) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->var = k;
    return n;
}

Expr make_param(const std::string& name, cplx v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Param;
    n->name = name;
    n->value = v;
    return n;
}

Expr make_unary(Op op, Expr a) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(a);
    return n;
}

Expr make_binary(Op op, Expr a, Expr b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

Expr make_pow(Expr a, int e) {
    auto n = std::make_shared<Node>();
    n->op = Op::Pow;
    n->lhs = std::move(a);
    n->exponent = e;
    return n;
}

Expr make_func(Fn f, Expr a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Func;
    n->fn = f;
    n->lhs = std::move(a);
    return n;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(const std::string& s, const Bindings& b) : s_(s), b_(b) {}

    Expr run() {
        skip();
        if (pos_ >= s_.size()) fail({"number", "identifier", "(", "-"}, "empty expression");
        Expr e = expr();
        skip();
        if (pos_ < s_.size()) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected character");
        return e;
    }

private:
    const std::string& s_;
    const Bindings& b_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
        throw ParseError(pos_ + 1, std::move(expected), what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            if (accept('+'))
                e = make_binary(Op::Add, e, term());
            else if (accept('-'))
                e = make_binary(Op::Sub, e, term());
            else
                return e;
        }
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            if (accept('*'))
                e = make_binary(Op::Mul, e, unary());
            else if (accept('/'))
                e = make_binary(Op::Div, e, unary());
            else
                return e;
        }
    }

    Expr unary() {
        if (accept('-')) return make_unary(Op::Neg, unary());
        return power();
    }

    Expr power() {
        Expr e = primary();
        while (accept('^')) e = make_pow(e, int_exponent());
        return e;
    }

    int int_exponent() {
        skip();
        bool paren = accept('(');
        bool neg = accept('-');
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(neg ? std::vector<std::string>{"integer"} : std::vector<std::string>{"integer", "-", "("},
                                "exponent must be an integer");
        const long v = std::strtol(s_.substr(start, pos_ - start).c_str(), nullptr, 10);
        if (v > 64) {
            pos_ = start;
            fail({"integer <= 64"}, "exponent too large");
        }
        if (paren && !accept(')')) fail({")"}, "unclosed exponent");
        return neg ? -static_cast<int>(v) : static_cast<int>(v);
    }

    Expr primary() {
        skip();
        if (pos_ >= s_.size()) fail({"number", "identifier", "(", "-"}, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) fail({")", "+", "-", "*", "/", "^"}, "missing closing parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail({"number", "identifier", "(", "-"}, std::string("unexpected character '") + c + "'");
    }

    Expr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++n;
            return n;
        };
        std::size_t nd = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            nd += digits();
        }
        if (nd == 0) {
            pos_ = start;
            fail({"number"}, "malformed number");
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                pos_ = q;
                digits();
            }
        }
        const double v = std::strtod(s_.substr(start, pos_ - start).c_str(), nullptr);
        if (!std::isfinite(v)) {
            pos_ = start;
            fail({"finite number"}, "number out of range");
        }
        return make_num(v);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string id = s_.substr(start, pos_ - start);
        if (id == "i") return make_imag();
        if (id.size() == 2 && id[0] == 'x' && id[1] >= '1' && id[1] <= '4') return make_var(id[1] - '1');
        auto f = function_table().find(id);
        if (f != function_table().end()) {
            if (!accept('(')) fail({"("}, "function '" + id + "' requires parentheses");
            Expr a = expr();
            if (!accept(')')) fail({")", "+", "-", "*", "/", "^"}, "missing closing parenthesis");
            return make_func(f->second, a);
        }
        auto p = b_.find(id);
        if (p != b_.end()) return make_param(id, p->second);
        std::vector<std::string> bound{"i", "x1", "x2", "x3", "x4"};
        for (const auto& [k, v] : b_) bound.push_back(k);
        throw UnknownIdentifier(id, start + 1, bound);
    }
};

}  // namespace

Expr parse(const std::string& text, const Bindings& params) {
    for (const auto& [k, v] : params)
        if (is_reserved_name(k)) throw std::invalid_argument("parameter name '" + k + "' is reserved");
    return Parser(text, params).run();
}

// ---------------------------------------------------------------------------
// printer

namespace {

int precedence(const Expr& e) {
    switch (e->op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
        case Op::Num: return e->num < 0 ? 3 : 5;
        default: return 5;
    }
}

std::string format_number(double v) {
    char buf[64];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string wrap(const Expr& e, bool paren) {
    const std::string s = print(e);
    return paren ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Expr& e) {
    switch (e->op) {
        case Op::Num: {
            if (e->num < 0) return "-" + format_number(-e->num);
            return format_number(e->num);
        }
        case Op::ImagUnit: return "i";
        case Op::Var: return "x" + std::to_string(e->var + 1);
        case Op::Param: return e->name;
        case Op::Neg: return "-" + wrap(e->lhs, precedence(e->lhs) < 3);
        case Op::Add:
        case Op::Sub:
            return wrap(e->lhs, precedence(e->lhs) < 1) + (e->op == Op::Add ? " + " : " - ") +
                   wrap(e->rhs, precedence(e->rhs) <= 1);
        case Op::Mul:
        case Op::Div:
            return wrap(e->lhs, precedence(e->lhs) < 2) + (e->op == Op::Mul ? "*" : "/") +
                   wrap(e->rhs, precedence(e->rhs) <= 2);
        case Op::Pow: return wrap(e->lhs, precedence(e->lhs) < 4) + "^" + std::to_string(e->exponent);
        case Op::Func: return std::string(function_name(e->fn)) + "(" + print(e->lhs) + ")";
    }
    return "";
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (!a || !b) return !a && !b;
    if (a->op != b->op) return false;
    switch (a->op) {
        case Op::Num: return a->num == b->num;
        case Op::ImagUnit: return true;
        case Op::Var: return a->var == b->var;
        case Op::Param: return a->name == b->name && a->value == b->value;
        case Op::Pow: return a->exponent == b->exponent && structurally_equal(a->lhs, b->lhs);
        case Op::Func: return a->fn == b->fn && structurally_equal(a->lhs, b->lhs);
        default: return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
    }
}

Expr conjugate(const Expr& e) {
    switch (e->op) {
        case Op::Num:
        case Op::Var: return e;
        case Op::ImagUnit: return make_unary(Op::Neg, make_imag());
        case Op::Param: return make_param(e->name + "_bar", std::conj(e->value));
        case Op::Neg: return make_unary(Op::Neg, conjugate(e->lhs));
        case Op::Pow: return make_pow(conjugate(e->lhs), e->exponent);
        case Op::Func: return make_func(e->fn, conjugate(e->lhs));
        default: return make_binary(e->op, conjugate(e->lhs), conjugate(e->rhs));
    }
}

// ---------------------------------------------------------------------------
// evaluation

Jet apply_function(Fn f, const Jet& u) {
    switch (f) {
        case Fn::Exp: return exp(u);
        case Fn::Log: return log(u);
        case Fn::Sin: return sin(u);
        case Fn::Cos: return cos(u);
        case Fn::Sinh: return sinh(u);
        case Fn::Cosh: return cosh(u);
        case Fn::Sqrt: return sqrt(u);
    }
    return u;
}

Jet eval_jet(const Expr& e, const std::array<double, 4>& point, int order, const EvalOptions& opt) {
    if (order < 0 || order > kMaxOrder) throw std::out_of_range("jet order out of range [0,6]");
    for (double x : point)
        if (!std::isfinite(x)) throw std::invalid_argument("evaluation point is not finite");

    std::function<Jet(const Expr&)> ev = [&](const Expr& n) -> Jet {
        switch (n->op) {
            case Op::Num: return Jet(order, n->num);
            case Op::ImagUnit: return Jet(order, cplx(0.0, 1.0));
            case Op::Var: return Jet::variable(order, n->var, point[n->var]);
            case Op::Param: return Jet(order, n->value);
            case Op::Neg: return -ev(n->lhs);
            case Op::Add: return ev(n->lhs) + ev(n->rhs);
            case Op::Sub: return ev(n->lhs) - ev(n->rhs);
            case Op::Mul: return ev(n->lhs) * ev(n->rhs);
            case Op::Div: {
                Jet d = ev(n->rhs);
                if (std::abs(d.value()) < opt.denominator_floor)
                    throw DomainError("denominator " + print(n->rhs) + " vanishes at the evaluation point");
                return ev(n->lhs) / d;
            }
            case Op::Pow: {
                Jet b = ev(n->lhs);
                if (n->exponent < 0 && std::abs(b.value()) < opt.denominator_floor)
                    throw DomainError("negative power of " + print(n->lhs) + " which vanishes at the evaluation point");
                return pow(b, n->exponent);
            }
            case Op::Func: {
                Jet u = ev(n->lhs);
                if ((n->fn == Fn::Log || n->fn == Fn::Sqrt) && std::abs(u.value()) < opt.denominator_floor)
                    throw DomainError(std::string(function_name(n->fn)) + " argument " + print(n->lhs) +
                                      " vanishes at the evaluation point");
                return apply_function(n->fn, u);
            }
        }
        throw std::logic_error("corrupt expression node");
    };
    return ev(e);
}

}  // namespace nf
