#ifndef HORSESHOE_EXPR_HPP
#define HORSESHOE_EXPR_HPP

#include <memory>
#include <string>

#include "horseshoe/interval.hpp"

namespace horseshoe {

// Immutable expression tree over a single real variable. Constants are
// stored exactly as binary floats; the same tree evaluates in doubles
// (fast, non-rigorous) and in intervals (rigorous).
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { Const, Var, Pi, Add, Sub, Mul, Div, Neg, Sin, Cos, Tan, Exp, Ln, Pow };

    static ExprPtr constant(double v);
    static ExprPtr variable();
    static ExprPtr make(Kind k, ExprPtr a, ExprPtr b = nullptr);
    static ExprPtr power(ExprPtr a, int n);

    Kind kind() const { return kind_; }
    double value() const { return value_; }
    int exponent() const { return exponent_; }
    const ExprPtr& left() const { return a_; }
    const ExprPtr& right() const { return b_; }

    double eval(double x) const;
    Interval eval(const Interval& x) const;
    ExprPtr derivative() const;
    std::string to_string() const;

    Expr(Kind k, double v, int n, ExprPtr a, ExprPtr b)
        : kind_(k), value_(v), exponent_(n), a_(std::move(a)), b_(std::move(b)) {}

private:
    Kind kind_;
    double value_ = 0.0;
    int exponent_ = 0;
    ExprPtr a_, b_;
};

// Infix grammar: identifiers {x, y} (either names the variable), `pi`,
// decimal or hex-float constants, + - * / unary -, ^ with integer
// exponent, functions sin cos tan exp ln. Errors carry the byte offset.
ExprPtr parse_expr(const std::string& text);

} // namespace horseshoe

#endif
