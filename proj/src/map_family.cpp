#include "horseshoe/map_family.hpp"

#include <cmath>

namespace horseshoe {

namespace {

// Knuth TwoSum: s + err == a + b exactly.
inline double two_sum_err(double a, double b, double s)
{
    double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

Interval two_pi() { return Interval(2.0) * pi_interval(); }

} // namespace

double add_down(double a, double b)
{
    double s = a + b;
    if (!std::isfinite(s)) return s;
    if (two_sum_err(a, b, s) < 0.0) s = next_down(s);
    return s;
}

double add_up(double a, double b)
{
    double s = a + b;
    if (!std::isfinite(s)) return s;
    if (two_sum_err(a, b, s) > 0.0) s = next_up(s);
    return s;
}

Interval shift_interval(const Interval& x, double t)
{
    return Interval(add_down(x.lo(), t), add_up(x.hi(), t));
}

IBox shift_x(const IBox& b, double t)
{
    return IBox(shift_interval(b.x, t), b.y);
}

namespace {

// first-order enclosure: hull evaluation per slice
Interval mean_riemann(const ExprPtr& w, int n_slices)
{
    const Interval tp = two_pi();
    const Interval n(static_cast<double>(n_slices));
    Interval acc(0.0);
    Interval prev = Interval(0.0); // t_0 = 0 exactly
    for (int i = 1; i <= n_slices; ++i) {
        Interval t = (i == n_slices) ? Interval(1.0)
                                     : Interval(static_cast<double>(i)) / n;
        Interval slice = Interval::hull(prev, t);
        acc = acc + w->eval(sin(tp * slice)) * (t - prev);
        prev = t;
    }
    return acc;
}

} // namespace

namespace {

// pairwise (tree) sum of per-slice midpoint terms plus the rigorous
// remainder g''(xi) h^3 / 24. Sequential interval accumulation widens by
// ~n ulp, which dominates past ~1e5 slices; the tree keeps it at ~log n.
Interval mean_pairwise(const ExprPtr& w, const ExprPtr& dw, const ExprPtr& d2w,
                       int lo, int hi, int n_slices)
{
    if (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        return mean_pairwise(w, dw, d2w, lo, mid, n_slices) +
               mean_pairwise(w, dw, d2w, mid, hi, n_slices);
    }
    const Interval tp = two_pi();
    Interval a, b, mid;
    if ((n_slices & (n_slices - 1)) == 0) {
        // power-of-two slice count: endpoints and midpoints are exact
        // dyadics, so slices are thin and Sum len == 1 exactly. Interval
        // division would widen each endpoint by an ulp, and those widths
        // sum to ~n ulp across the partition.
        double inv = 1.0 / n_slices;
        a = Interval(lo * inv);
        b = Interval(hi * inv);
        mid = Interval((lo + hi) * (0.5 * inv));
    } else {
        const Interval n(static_cast<double>(n_slices));
        a = (lo == 0) ? Interval(0.0) : Interval(static_cast<double>(lo)) / n;
        b = (hi == n_slices) ? Interval(1.0)
                             : Interval(static_cast<double>(hi)) / n;
        mid = (a + b) / Interval(2.0);
    }
    Interval len = b - a;
    Interval slice = Interval::hull(a, b);
    Interval s = sin(tp * slice), c = cos(tp * slice);
    Interval g2 = d2w->eval(s) * (tp * c) * (tp * c) - dw->eval(s) * (tp * tp) * s;
    return w->eval(sin(tp * mid)) * len + g2 * (len * len * len) / Interval(24.0);
}

} // namespace

Interval mean_quadrature(const ExprPtr& w, int n_slices)
{
    if (n_slices < 1) throw DomainError("mean_quadrature requires n_slices >= 1");
    // midpoint rule with the rigorous remainder per slice; the integrand's
    // second derivative comes from symbolic differentiation. The mean
    // enclosure is a map parameter, so its width feeds every orbit step
    // and orbit validation amplifies it by the accumulated expansion --
    // second order plus tree summation keeps it harmless.
    try {
        ExprPtr dw = w->derivative();
        ExprPtr d2w = dw->derivative();
        Interval out = mean_pairwise(w, dw, d2w, 0, n_slices, n_slices);
        if (out.is_finite()) return out;
    } catch (const Error&) {
        // remainder not evaluable (derivative domain issue): fall through
    }
    return mean_riemann(w, n_slices);
}

MapFamily MapFamily::dissipative(Interval a, Interval b)
{
    if (!(b.lo() > 0.0 && b.hi() < 1.0))
        throw DomainError("dissipative family requires 0 < b < 1");
    MapFamily f;
    f.type_ = Type::Dissipative;
    f.a_ = a;
    f.b_ = b;
    return f;
}

MapFamily MapFamily::generalized(ExprPtr h, ExprPtr w, int mean_slices)
{
    MapFamily f;
    f.type_ = Type::Generalized;
    f.h_ = std::move(h);
    f.w_ = std::move(w);
    f.dh_ = f.h_->derivative();
    f.dw_ = f.w_->derivative();
    f.mean_ = mean_quadrature(f.w_, mean_slices);

    // range condition [-1,1] within h([-1,1]): look for sample points with
    // h <= -1 and h >= 1 (intermediate value theorem does the rest).
    // Families attaining +-1 exactly (h = sin(2*pi*y)) only reach the
    // bound up to enclosure width; accepted but flagged non-strict.
    bool low_strict = false, high_strict = false, low_touch = false, high_touch = false;
    const int grid = 256;
    for (int i = 0; i <= grid; ++i) {
        double y = -1.0 + 2.0 * i / grid;
        Interval hy = f.h_->eval(Interval(y));
        if (hy.hi() <= -1.0) low_strict = true;
        if (hy.lo() >= 1.0) high_strict = true;
        if (hy.lo() <= -1.0) low_touch = true;
        if (hy.hi() >= 1.0) high_touch = true;
    }
    if (!(low_touch && high_touch))
        throw DomainError("generalized family requires [-1,1] within h([-1,1])");
    f.range_strict_ = low_strict && high_strict;
    return f;
}

MapFamily MapFamily::powered(int k) const
{
    if (k < 1) throw DomainError("power must be >= 1");
    MapFamily f = *this;
    f.power_ = k;
    return f;
}

Interval MapFamily::v(const Interval& s) const
{
    return w_->eval(s) - mean_;
}

Interval MapFamily::dv(const Interval& s) const
{
    return dw_->eval(s);
}

// Deck reduction: F commutes with (x,y) -> (x+1,y), so evaluate on
// x - k and shift the first output back by k. shift_interval is exact
// when representable, which makes the commutation test bit-exact.
IBox MapFamily::eval_lift(const IBox& B) const
{
    IBox R = B;
    for (int p = 0; p < power_; ++p) {
        if (!R.is_finite()) throw NonFiniteError("eval_lift on non-finite box");
        double k = std::floor(R.x.lo());
        if (std::fabs(k) > 9e15) k = 0.0; // give up reducing, still sound
        R = shift_x(eval_core(shift_x(R, -k)), k);
    }
    return R;
}

IBox MapFamily::eval_lift_inverse(const IBox& B) const
{
    IBox R = B;
    for (int p = 0; p < power_; ++p) {
        if (!R.is_finite()) throw NonFiniteError("eval_lift_inverse on non-finite box");
        double k = std::floor(R.x.lo());
        if (std::fabs(k) > 9e15) k = 0.0;
        R = shift_x(eval_core_inverse(shift_x(R, -k)), k);
    }
    return R;
}

IBox MapFamily::eval_core(const IBox& B) const
{
    const Interval tp = two_pi();
    if (type_ == Type::Dissipative) {
        Interval u = B.x + a_ * B.y;
        return IBox(u, b_ * B.y + sin(tp * u));
    }
    Interval u = B.x + h_->eval(B.y);
    return IBox(u, B.y + v(sin(tp * u)));
}

IBox MapFamily::eval_core_inverse(const IBox& B) const
{
    const Interval tp = two_pi();
    if (type_ == Type::Dissipative) {
        Interval y = (B.y - sin(tp * B.x)) / b_;
        return IBox(B.x - a_ * y, y);
    }
    Interval y = B.y - v(sin(tp * B.x));
    return IBox(B.x - h_->eval(y), y);
}

namespace {
IMatrix2 mat_mul(const IMatrix2& l, const IMatrix2& r)
{
    IMatrix2 m;
    m.a11 = l.a11 * r.a11 + l.a12 * r.a21;
    m.a12 = l.a11 * r.a12 + l.a12 * r.a22;
    m.a21 = l.a21 * r.a11 + l.a22 * r.a21;
    m.a22 = l.a21 * r.a12 + l.a22 * r.a22;
    return m;
}
} // namespace

IMatrix2 MapFamily::jacobian(const IBox& B) const
{
    if (power_ > 1) {
        // chain rule through one-step enclosures of the intermediates
        MapFamily once = *this;
        once.power_ = 1;
        IBox R = B;
        IMatrix2 J = once.jacobian(R);
        for (int p = 1; p < power_; ++p) {
            R = once.eval_lift(R);
            J = mat_mul(once.jacobian(R), J);
        }
        return J;
    }

    if (!B.is_finite()) throw NonFiniteError("jacobian on non-finite box");
    const Interval tp = two_pi();
    double k = std::floor(B.x.lo());
    if (std::fabs(k) > 9e15) k = 0.0;
    IBox R = shift_x(B, -k); // derivatives are deck-invariant

    if (type_ == Type::Dissipative) {
        Interval c = cos(tp * (R.x + a_ * R.y));
        IMatrix2 m;
        m.a11 = Interval(1.0);
        m.a12 = a_;
        m.a21 = tp * c;
        m.a22 = b_ + a_ * (tp * c);
        return m;
    }
    Interval hy = dh_->eval(R.y);
    Interval u = R.x + h_->eval(R.y);
    Interval t = dv(sin(tp * u)) * (tp * cos(tp * u));
    IMatrix2 m;
    m.a11 = Interval(1.0);
    m.a12 = hy;
    m.a21 = t;
    m.a22 = Interval(1.0) + t * hy;
    return m;
}

double MapFamily::expansion_bound(const IBox& B) const
{
    return inf_norm(jacobian(B)).hi();
}

double MapFamily::vertical_displacement_bound(double L, int slices) const
{
    if (!(L > 0.0)) throw DomainError("vertical_displacement_bound requires L > 0");
    if (slices < 1) throw DomainError("slices must be >= 1");
    if (power_ > 1) {
        // per-step bounds on a band widened by the displacement so far
        MapFamily once = *this;
        once.power_ = 1;
        double total = 0.0;
        for (int p = 0; p < power_; ++p)
            total += once.vertical_displacement_bound(L + total, slices);
        return total;
    }
    const Interval tp = two_pi();
    double bound = 0.0;

    if (type_ == Type::Dissipative) {
        // pr2(F) - y = (b-1)*y + sin(2*pi*(x+a*y)); evaluated per cell to
        // keep the y-dependency tight
        Interval bm1 = b_ - Interval(1.0);
        for (int i = 0; i < slices; ++i) {
            Interval X(static_cast<double>(i) / slices, static_cast<double>(i + 1) / slices);
            for (int j = 0; j < slices; ++j) {
                Interval Y(-L + 2.0 * L * j / slices, -L + 2.0 * L * (j + 1) / slices);
                Interval d = bm1 * Y + sin(tp * (X + a_ * Y));
                bound = std::max(bound, abs(d).hi());
            }
        }
        return bound;
    }

    // pr2(F) - y = v(s) with s = sin(2*pi*(x+h(y))) in [-1,1]; the max of
    // |v| over [-1,1] bounds the displacement on every band
    const int n = std::max(slices * slices, 1024);
    for (int i = 0; i < n; ++i) {
        Interval S(-1.0 + 2.0 * i / n, -1.0 + 2.0 * (i + 1) / n);
        bound = std::max(bound, abs(v(S)).hi());
    }
    return bound;
}

void MapFamily::eval_pt(double x, double y, double& X, double& Y) const
{
    X = x;
    Y = y;
    for (int p = 0; p < power_; ++p) {
        if (type_ == Type::Dissipative) {
            double u = X + a_.mid() * Y;
            Y = b_.mid() * Y + std::sin(2.0 * M_PI * u);
            X = u;
            continue;
        }
        double u = X + h_->eval(Y);
        Y = Y + (w_->eval(std::sin(2.0 * M_PI * u)) - mean_.mid());
        X = u;
    }
}

void MapFamily::eval_pt_inverse(double X, double Y, double& x, double& y) const
{
    x = X;
    y = Y;
    for (int p = 0; p < power_; ++p) {
        if (type_ == Type::Dissipative) {
            y = (y - std::sin(2.0 * M_PI * x)) / b_.mid();
            x = x - a_.mid() * y;
            continue;
        }
        y = y - (w_->eval(std::sin(2.0 * M_PI * x)) - mean_.mid());
        x = x - h_->eval(y);
    }
}

} // namespace horseshoe
