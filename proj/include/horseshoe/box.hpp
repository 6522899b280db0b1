#ifndef HORSESHOE_BOX_HPP
#define HORSESHOE_BOX_HPP

#include "horseshoe/interval.hpp"

namespace horseshoe {

// Axis-aligned planar box in the lift plane: x runs along the covering
// direction, y is the annulus height.
struct IBox {
    Interval x, y;

    IBox() = default;
    IBox(Interval x_, Interval y_) : x(x_), y(y_) {}

    bool is_finite() const { return x.is_finite() && y.is_finite(); }
    double width() const { return std::max(x.width(), y.width()); }

    bool contains(double px, double py) const { return x.contains(px) && y.contains(py); }
    bool contains(const IBox& o) const { return x.contains(o.x) && y.contains(o.y); }
    bool subset_of(const IBox& o) const { return o.contains(*this); }
    bool strict_subset_of(const IBox& o) const
    {
        return x.strict_subset_of(o.x) && y.strict_subset_of(o.y);
    }

    bool operator==(const IBox& o) const { return x == o.x && y == o.y; }

    static IBox hull(const IBox& a, const IBox& b)
    {
        return IBox(Interval::hull(a.x, b.x), Interval::hull(a.y, b.y));
    }

    static std::optional<IBox> intersect(const IBox& a, const IBox& b)
    {
        auto ix = Interval::intersect(a.x, b.x);
        auto iy = Interval::intersect(a.y, b.y);
        if (!ix || !iy) return std::nullopt;
        return IBox(*ix, *iy);
    }

    IBox inflated(double r) const
    {
        return IBox(Interval(x.lo() - r, x.hi() + r), Interval(y.lo() - r, y.hi() + r));
    }

    IBox translated(double dx, double dy) const
    {
        return IBox(x + Interval(dx), y + Interval(dy));
    }
};

// Interval 2x2 matrix; holds Jacobian enclosures.
struct IMatrix2 {
    Interval a11, a12, a21, a22;

    bool is_finite() const
    {
        return a11.is_finite() && a12.is_finite() && a21.is_finite() && a22.is_finite();
    }
};

// Enclosure of the max row sum of absolute values over all matrices in M.
// hi endpoint is a rigorous upper bound of sup ||A||_inf, A in M.
inline Interval inf_norm(const IMatrix2& m)
{
    if (!m.is_finite()) throw NonFiniteError("inf_norm of non-finite matrix");
    Interval r1 = abs(m.a11) + abs(m.a12);
    Interval r2 = abs(m.a21) + abs(m.a22);
    // the max of two intervals: [max(lo), max(hi)]
    return Interval(std::max(r1.lo(), r2.lo()), std::max(r1.hi(), r2.hi()));
}

} // namespace horseshoe

#endif
