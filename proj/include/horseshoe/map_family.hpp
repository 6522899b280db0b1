#ifndef HORSESHOE_MAP_FAMILY_HPP
#define HORSESHOE_MAP_FAMILY_HPP

#include "horseshoe/box.hpp"
#include "horseshoe/expr.hpp"

namespace horseshoe {

// Directed addition via TwoSum: exact when the sum is representable,
// outward-rounded otherwise. Used for integer deck shifts so that
// shifting by 0 is the identity and F(B+(k,0)) == F(B)+(k,0) bit-exactly.
double add_down(double a, double b);
double add_up(double a, double b);
Interval shift_interval(const Interval& x, double t);
IBox shift_x(const IBox& b, double t);

// Rigorous enclosure of the integral over [0,1] of w(sin(2*pi*x)) by an
// interval Riemann sum on n_slices uniform subintervals.
Interval mean_quadrature(const ExprPtr& w, int n_slices);

// A parameterized lift of an annulus homeomorphism. Two variants:
//   Dissipative:  F(x,y) = (x + a*y, b*y + sin(2*pi*(x + a*y))), 0 < b < 1
//   Generalized:  F(x,y) = (x + h(y), y + v(sin(2*pi*(x + h(y))))),
//                 v(s) = w(s) - mean,  mean = integral of w(sin(2*pi*x))
// Parameters are intervals: every enclosure below is valid for every
// parameter value inside them, so a thin parameter box certifies the
// exact map it contains.
class MapFamily {
public:
    enum class Type { Dissipative, Generalized };

    static MapFamily dissipative(Interval a, Interval b);
    static MapFamily generalized(ExprPtr h, ExprPtr w, int mean_slices = 4096);

    // the same family evaluating the k-fold composition F^k everywhere
    // (enclosures, jacobians by the chain rule, point evaluations)
    MapFamily powered(int k) const;
    int power() const { return power_; }

    Type type() const { return type_; }
    const Interval& a() const { return a_; }
    const Interval& b() const { return b_; }
    const ExprPtr& h() const { return h_; }
    const ExprPtr& w() const { return w_; }
    const Interval& mean() const { return mean_; }
    // true if the range condition [-1,1] within h([-1,1]) was verified by
    // strict interval inequalities; false if only attained up to enclosure
    // width (boundary-equality families such as h = sin(2*pi*y))
    bool range_condition_strict() const { return range_strict_; }

    // v(s) = w(s) - mean (Generalized only)
    Interval v(const Interval& s) const;
    Interval dv(const Interval& s) const;

    IBox eval_lift(const IBox& B) const;
    IBox eval_lift_inverse(const IBox& B) const;
    IMatrix2 jacobian(const IBox& B) const;
    double expansion_bound(const IBox& B) const;

    // Rigorous upper bound on max over [0,1]x[-L,L] of |pr2(F(x,y)) - y|
    double vertical_displacement_bound(double L, int slices = 256) const;

    // double-precision point evaluation (non-rigorous front end)
    void eval_pt(double x, double y, double& X, double& Y) const;
    void eval_pt_inverse(double X, double Y, double& x, double& y) const;

private:
    MapFamily() = default;

    IBox eval_core(const IBox& B) const;
    IBox eval_core_inverse(const IBox& B) const;

    Type type_ = Type::Dissipative;
    int power_ = 1;
    Interval a_, b_;
    ExprPtr h_, w_, dh_, dw_;
    Interval mean_;
    bool range_strict_ = false;
};

} // namespace horseshoe

#endif
