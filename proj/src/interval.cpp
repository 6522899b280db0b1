#include "horseshoe/interval.hpp"

namespace horseshoe {

namespace {

// libm kernels on this platform are faithfully rounded; +/-2 ulp widening
// turns them into enclosures.
Interval widen_2ulp(double v)
{
    return Interval(next_down(next_down(v)), next_up(next_up(v)));
}

Interval clamp_to(const Interval& x, double lo, double hi)
{
    return Interval(std::max(x.lo(), lo), std::min(x.hi(), hi));
}

// Conservative: true whenever an integer might lie in the enclosure.
bool may_contain_integer(const Interval& x)
{
    if (!x.is_finite()) return true;
    if (x.width() >= 1.0) return true;
    return std::floor(x.hi()) >= std::ceil(x.lo());
}

const Interval kPi(next_down(M_PI), next_up(M_PI));
const Interval kTwoPi = kPi * Interval(2.0);
const Interval kHalfPi = kPi / Interval(2.0);

} // namespace

Interval pi_interval() { return kPi; }

// Argument reduction: the quadrant test is done in interval arithmetic
// against the pi enclosure, so a critical point is included whenever it
// cannot be excluded. Wide or non-finite inputs fall back to [-1,1].
Interval sin(const Interval& x)
{
    if (!x.is_finite() || x.width() >= kTwoPi.hi()) return Interval(-1.0, 1.0);

    Interval r = Interval::hull(widen_2ulp(std::sin(x.lo())), widen_2ulp(std::sin(x.hi())));
    // max of sin at pi/2 + 2k*pi, min at -pi/2 + 2k*pi
    if (may_contain_integer((x - kHalfPi) / kTwoPi)) r = Interval::hull(r, Interval(1.0));
    if (may_contain_integer((x + kHalfPi) / kTwoPi)) r = Interval::hull(r, Interval(-1.0));
    return clamp_to(r, -1.0, 1.0);
}

Interval cos(const Interval& x)
{
    if (!x.is_finite() || x.width() >= kTwoPi.hi()) return Interval(-1.0, 1.0);

    Interval r = Interval::hull(widen_2ulp(std::cos(x.lo())), widen_2ulp(std::cos(x.hi())));
    if (may_contain_integer(x / kTwoPi)) r = Interval::hull(r, Interval(1.0));
    if (may_contain_integer((x - kPi) / kTwoPi)) r = Interval::hull(r, Interval(-1.0));
    return clamp_to(r, -1.0, 1.0);
}

Interval exp(const Interval& x)
{
    double lo = next_down(next_down(std::exp(x.lo())));
    double hi = next_up(next_up(std::exp(x.hi())));
    return Interval(std::max(lo, 0.0), hi);
}

Interval ln(const Interval& x)
{
    if (x.lo() <= 0.0) throw DomainError("ln requires a strictly positive interval");
    return Interval::hull(widen_2ulp(std::log(x.lo())), widen_2ulp(std::log(x.hi())));
}

Interval tan(const Interval& x)
{
    if (!x.is_finite()) throw NonFiniteError("tan of non-finite interval");
    // poles at pi/2 + k*pi
    if (may_contain_integer((x - kHalfPi) / kPi))
        throw PoleError("tan argument interval may contain a pole");
    return Interval::hull(widen_2ulp(std::tan(x.lo())), widen_2ulp(std::tan(x.hi())));
}

namespace {

// [v,v]^n by square-and-multiply on intervals; keeps rounding rigorous
// without trusting libm pow.
Interval point_pow(double v, int n)
{
    Interval acc(1.0);
    Interval base(v);
    unsigned e = static_cast<unsigned>(n);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

} // namespace

Interval pow_int(const Interval& x, int n)
{
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / pow_int(x, -n);

    const Interval plo = point_pow(x.lo(), n);
    const Interval phi = point_pow(x.hi(), n);
    if (n % 2 == 1) return Interval(plo.lo(), phi.hi());
    if (x.lo() >= 0.0) return Interval(plo.lo(), phi.hi());
    if (x.hi() <= 0.0) return Interval(phi.lo(), plo.hi());
    return Interval(0.0, std::max(plo.hi(), phi.hi()));
}

} // namespace horseshoe
