#ifndef HORSESHOE_INTERVAL_HPP
#define HORSESHOE_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "horseshoe/errors.hpp"

namespace horseshoe {

// Directed rounding is emulated by widening round-to-nearest results with
// next-representable steps. No global FP state is touched, so every
// operation is pure and thread-safe.
inline double next_down(double x)
{
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x)
{
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Closed real interval [lo, hi]. Endpoints are never NaN; infinite
// endpoints act as overflow sentinels and flag the interval non-finite.
//
// Soundness contract: for any operation op and inputs X, Y, the exact real
// op(x, y) lies in op(X, Y) for all x in X, y in Y.
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}
    explicit Interval(double v) : lo_(v), hi_(v) { check(); }
    Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }
    double width() const { return hi_ - lo_; }
    double mid() const
    {
        double m = 0.5 * (lo_ + hi_);
        if (!std::isfinite(m)) m = 0.5 * lo_ + 0.5 * hi_;
        return std::clamp(m, lo_, hi_);
    }
    double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

    bool contains(double p) const { return lo_ <= p && p <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool subset_of(const Interval& o) const { return o.contains(*this); }
    bool strict_subset_of(const Interval& o) const { return o.lo_ < lo_ && hi_ < o.hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

    static Interval hull(const Interval& a, const Interval& b)
    {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

    // Empty intersection is a value so search loops can branch on it.
    static std::optional<Interval> intersect(const Interval& a, const Interval& b)
    {
        double lo = std::max(a.lo_, b.lo_);
        double hi = std::min(a.hi_, b.hi_);
        if (lo > hi) return std::nullopt;
        return Interval(lo, hi);
    }

private:
    void check() const
    {
        if (std::isnan(lo_) || std::isnan(hi_) || lo_ > hi_)
            throw NonFiniteError("malformed interval endpoints");
    }

    double lo_, hi_;
};

inline Interval widen_1ulp(double lo, double hi)
{
    return Interval(next_down(lo), next_up(hi));
}

inline Interval operator+(const Interval& x, const Interval& y)
{
    return widen_1ulp(x.lo() + y.lo(), x.hi() + y.hi());
}

inline Interval operator-(const Interval& x, const Interval& y)
{
    return widen_1ulp(x.lo() - y.hi(), x.hi() - y.lo());
}

inline Interval operator-(const Interval& x)
{
    return Interval(-x.hi(), -x.lo());
}

inline Interval operator*(const Interval& x, const Interval& y)
{
    const double p1 = x.lo() * y.lo();
    const double p2 = x.lo() * y.hi();
    const double p3 = x.hi() * y.lo();
    const double p4 = x.hi() * y.hi();
    return widen_1ulp(std::min(std::min(p1, p2), std::min(p3, p4)),
                      std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator/(const Interval& x, const Interval& y)
{
    if (y.contains_zero()) throw DivisionByZeroInterval();
    const double q1 = x.lo() / y.lo();
    const double q2 = x.lo() / y.hi();
    const double q3 = x.hi() / y.lo();
    const double q4 = x.hi() / y.hi();
    return widen_1ulp(std::min(std::min(q1, q2), std::min(q3, q4)),
                      std::max(std::max(q1, q2), std::max(q3, q4)));
}

inline Interval abs(const Interval& x)
{
    if (x.lo() >= 0.0) return x;
    if (x.hi() <= 0.0) return -x;
    return Interval(0.0, x.mag());
}

// Elementary functions with containment soundness (interval.cpp).
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval exp(const Interval& x);
Interval ln(const Interval& x);
Interval tan(const Interval& x);
Interval pow_int(const Interval& x, int n);

// Rigorous enclosure of pi.
Interval pi_interval();

} // namespace horseshoe

#endif
