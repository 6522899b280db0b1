#include "horseshoe/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace horseshoe {

ExprPtr Expr::constant(double v)
{
    return std::make_shared<Expr>(Kind::Const, v, 0, nullptr, nullptr);
}

ExprPtr Expr::variable()
{
    return std::make_shared<Expr>(Kind::Var, 0.0, 0, nullptr, nullptr);
}

ExprPtr Expr::make(Kind k, ExprPtr a, ExprPtr b)
{
    return std::make_shared<Expr>(k, 0.0, 0, std::move(a), std::move(b));
}

ExprPtr Expr::power(ExprPtr a, int n)
{
    return std::make_shared<Expr>(Kind::Pow, 0.0, n, std::move(a), nullptr);
}

double Expr::eval(double x) const
{
    switch (kind_) {
    case Kind::Const: return value_;
    case Kind::Var: return x;
    case Kind::Pi: return M_PI;
    case Kind::Add: return a_->eval(x) + b_->eval(x);
    case Kind::Sub: return a_->eval(x) - b_->eval(x);
    case Kind::Mul: return a_->eval(x) * b_->eval(x);
    case Kind::Div: return a_->eval(x) / b_->eval(x);
    case Kind::Neg: return -a_->eval(x);
    case Kind::Sin: return std::sin(a_->eval(x));
    case Kind::Cos: return std::cos(a_->eval(x));
    case Kind::Tan: return std::tan(a_->eval(x));
    case Kind::Exp: return std::exp(a_->eval(x));
    case Kind::Ln: return std::log(a_->eval(x));
    case Kind::Pow: return std::pow(a_->eval(x), exponent_);
    }
    return 0.0;
}

Interval Expr::eval(const Interval& x) const
{
    switch (kind_) {
    case Kind::Const: return Interval(value_);
    case Kind::Var: return x;
    case Kind::Pi: return pi_interval();
    case Kind::Add: return a_->eval(x) + b_->eval(x);
    case Kind::Sub: return a_->eval(x) - b_->eval(x);
    case Kind::Mul: return a_->eval(x) * b_->eval(x);
    case Kind::Div: return a_->eval(x) / b_->eval(x);
    case Kind::Neg: return -a_->eval(x);
    case Kind::Sin: return sin(a_->eval(x));
    case Kind::Cos: return cos(a_->eval(x));
    case Kind::Tan: return tan(a_->eval(x));
    case Kind::Exp: return exp(a_->eval(x));
    case Kind::Ln: return ln(a_->eval(x));
    case Kind::Pow: return pow_int(a_->eval(x), exponent_);
    }
    return Interval(0.0);
}

namespace {
using K = Expr::Kind;

bool is_const(const ExprPtr& e, double v)
{
    return e->kind() == K::Const && e->value() == v;
}

// light simplification keeps derivative trees small
ExprPtr mk_add(ExprPtr a, ExprPtr b)
{
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    return Expr::make(K::Add, std::move(a), std::move(b));
}
ExprPtr mk_sub(ExprPtr a, ExprPtr b)
{
    if (is_const(b, 0.0)) return a;
    if (is_const(a, 0.0)) return Expr::make(K::Neg, std::move(b));
    return Expr::make(K::Sub, std::move(a), std::move(b));
}
ExprPtr mk_mul(ExprPtr a, ExprPtr b)
{
    if (is_const(a, 0.0) || is_const(b, 0.0)) return Expr::constant(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    return Expr::make(K::Mul, std::move(a), std::move(b));
}
} // namespace

ExprPtr Expr::derivative() const
{
    switch (kind_) {
    case K::Const: return constant(0.0);
    case K::Pi: return constant(0.0);
    case K::Var: return constant(1.0);
    case K::Add: return mk_add(a_->derivative(), b_->derivative());
    case K::Sub: return mk_sub(a_->derivative(), b_->derivative());
    case K::Mul:
        return mk_add(mk_mul(a_->derivative(), b_), mk_mul(a_, b_->derivative()));
    case K::Div:
        // (a/b)' = (a'b - ab') / b^2
        return make(K::Div,
                    mk_sub(mk_mul(a_->derivative(), b_), mk_mul(a_, b_->derivative())),
                    power(b_, 2));
    case K::Neg: return make(K::Neg, a_->derivative());
    case K::Sin: return mk_mul(make(K::Cos, a_), a_->derivative());
    case K::Cos: return make(K::Neg, mk_mul(make(K::Sin, a_), a_->derivative()));
    case K::Tan:
        // tan' = 1 + tan^2
        return mk_mul(mk_add(constant(1.0), power(make(K::Tan, a_), 2)), a_->derivative());
    case K::Exp: return mk_mul(make(K::Exp, a_), a_->derivative());
    case K::Ln: return make(K::Div, a_->derivative(), a_);
    case K::Pow:
        if (exponent_ == 0) return constant(0.0);
        return mk_mul(mk_mul(constant(static_cast<double>(exponent_)), power(a_, exponent_ - 1)),
                      a_->derivative());
    }
    return constant(0.0);
}

std::string Expr::to_string() const
{
    switch (kind_) {
    case K::Const: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value_);
        return buf;
    }
    case K::Var: return "x";
    case K::Pi: return "pi";
    case K::Add: return "(" + a_->to_string() + "+" + b_->to_string() + ")";
    case K::Sub: return "(" + a_->to_string() + "-" + b_->to_string() + ")";
    case K::Mul: return "(" + a_->to_string() + "*" + b_->to_string() + ")";
    case K::Div: return "(" + a_->to_string() + "/" + b_->to_string() + ")";
    case K::Neg: return "(-" + a_->to_string() + ")";
    case K::Sin: return "sin(" + a_->to_string() + ")";
    case K::Cos: return "cos(" + a_->to_string() + ")";
    case K::Tan: return "tan(" + a_->to_string() + ")";
    case K::Exp: return "exp(" + a_->to_string() + ")";
    case K::Ln: return "ln(" + a_->to_string() + ")";
    case K::Pow: return "(" + a_->to_string() + "^" + std::to_string(exponent_) + ")";
    }
    return "";
}

namespace {

// recursive-descent parser; offsets are byte positions into the input
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    ExprPtr expr()
    {
        ExprPtr e = term();
        for (;;) {
            if (eat('+')) e = Expr::make(K::Add, e, term());
            else if (eat('-')) e = Expr::make(K::Sub, e, term());
            else return e;
        }
    }

    ExprPtr term()
    {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*')) e = Expr::make(K::Mul, e, unary());
            else if (eat('/')) e = Expr::make(K::Div, e, unary());
            else return e;
        }
    }

    ExprPtr unary()
    {
        if (eat('-')) return Expr::make(K::Neg, unary());
        eat('+');
        return postfix();
    }

    ExprPtr postfix()
    {
        ExprPtr e = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            std::size_t start = pos;
            long n = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                n = n * 10 + (s[pos] - '0');
                ++pos;
            }
            if (pos == start) fail("expected integer exponent after '^'");
            e = Expr::power(e, static_cast<int>(neg ? -n : n));
        }
        return e;
    }

    ExprPtr atom()
    {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];

        if (c == '(') {
            ++pos;
            ExprPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s.c_str() + pos;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos += static_cast<std::size_t>(end - begin);
            return Expr::constant(v);
        }

        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string id = s.substr(start, pos - start);
            if (id == "x" || id == "y") return Expr::variable();
            if (id == "pi") return Expr::make(K::Pi, nullptr);
            K fk;
            if (id == "sin") fk = K::Sin;
            else if (id == "cos") fk = K::Cos;
            else if (id == "tan") fk = K::Tan;
            else if (id == "exp") fk = K::Exp;
            else if (id == "ln" || id == "log") fk = K::Ln;
            else { pos = start; fail("unknown identifier '" + id + "'"); }
            if (!eat('(')) fail("expected '(' after function name");
            ExprPtr arg = expr();
            if (!eat(')')) fail("expected ')'");
            return Expr::make(fk, arg);
        }

        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text)
{
    Parser p(text);
    ExprPtr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

} // namespace horseshoe
