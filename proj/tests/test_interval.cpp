#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horseshoe/box.hpp"
#include "horseshoe/interval.hpp"

using namespace horseshoe;

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

double rand_in(std::mt19937_64& rng, const Interval& x)
{
    std::uniform_real_distribution<double> d(x.lo(), x.hi());
    return std::clamp(d(rng), x.lo(), x.hi());
}

Interval rand_interval(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> d(lo, hi);
    double a = d(rng), b = d(rng);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

// Random subinterval of x for monotonicity checks.
Interval rand_sub(std::mt19937_64& rng, const Interval& x)
{
    double a = rand_in(rng, x), b = rand_in(rng, x);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

} // namespace

TEST_CASE("rational arithmetic on exact endpoints")
{
    Interval s = Interval(1, 2) + Interval(3, 4);
    CHECK(s.contains(Interval(4, 6)));
    CHECK(s.width() <= 2 + 2e-15);

    Interval p = Interval(-1, 1) * Interval(-1, 1);
    CHECK(p.contains(Interval(-1, 1)));
    CHECK(p.lo() >= -1 - 1e-15);
    CHECK(p.hi() <= 1 + 1e-15);

    CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), DivisionByZeroInterval);
    Interval q = Interval(1, 1) / Interval(2, 2);
    CHECK(q.contains(0.5));
}

TEST_CASE("set operations")
{
    CHECK(Interval::hull(Interval(0, 1), Interval(2, 3)) == Interval(0, 3));
    CHECK(!Interval::intersect(Interval(0, 1), Interval(2, 3)).has_value());
    auto i = Interval::intersect(Interval(0, 2), Interval(1, 3));
    REQUIRE(i.has_value());
    CHECK(*i == Interval(1, 2));
    CHECK(Interval(0.1, 0.2).subset_of(Interval(0, 1)));
    CHECK(!Interval(0.1, 1.2).subset_of(Interval(0, 1)));
    CHECK(Interval(0.1, 0.2).strict_subset_of(Interval(0, 1)));
    CHECK(!Interval(0, 0.2).strict_subset_of(Interval(0, 1)));
    CHECK(Interval(0, 1).contains(1.0));
    CHECK(!Interval(0, 1).contains(1.0 + 1e-9));
}

TEST_CASE("malformed intervals rejected")
{
    CHECK_THROWS_AS(Interval(2, 1), NonFiniteError);
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Interval(nan, 1), NonFiniteError);
    // infinities allowed as sentinels, flagged non-finite
    Interval inf(0, std::numeric_limits<double>::infinity());
    CHECK(!inf.is_finite());
}

TEST_CASE("elementary function spot values")
{
    Interval s0 = sin(Interval(0.0));
    CHECK(s0.contains(0.0));
    CHECK(s0.width() <= 4 * std::numeric_limits<double>::denorm_min() + 1e-300);

    CHECK(sin(Interval(0, 10)) == Interval(-1, 1));

    // sin over [0, pi/2+0.1] must include the max
    Interval sm = sin(Interval(0.0, 1.7));
    CHECK(sm.hi() == 1.0);

    Interval e = exp(Interval(0, 1));
    CHECK(e.contains(1.0));
    CHECK(e.contains(kE));
    CHECK(e.width() <= (kE - 1) + 1e-14);

    Interval l = ln(Interval(1, kE));
    CHECK(l.contains(0.0));
    CHECK(l.contains(1.0));
    CHECK_THROWS_AS(ln(Interval(-1, 1)), DomainError);

    CHECK_THROWS_AS(tan(Interval(1.5, 1.7)), PoleError);
    Interval t = tan(Interval(-0.5, 0.5));
    CHECK(t.contains(std::tan(0.49)));

    Interval pi = pi_interval();
    CHECK(pi.contains(M_PI));
    CHECK(pi.lo() < 3.14159265358979323846);
    CHECK(pi.hi() > 3.14159265358979323846);

    CHECK(pow_int(Interval(-2, 3), 2).contains(Interval(0, 9)));
    CHECK(pow_int(Interval(-2, 3), 2).lo() == 0.0);
    CHECK(pow_int(Interval(-2, 3), 3).contains(Interval(-8, 27)));
    CHECK(pow_int(Interval(2, 3), 0) == Interval(1, 1));
    CHECK(pow_int(Interval(2, 4), -1).contains(Interval(0.25, 0.5)));
}

TEST_CASE("cosine critical points")
{
    Interval c = cos(Interval(-0.1, 0.1));
    CHECK(c.hi() == 1.0);
    Interval c2 = cos(Interval(3.0, 3.3)); // includes pi
    CHECK(c2.lo() == -1.0);
    CHECK(cos(Interval(0, 100)) == Interval(-1, 1));
}

TEST_CASE("inf_norm")
{
    IMatrix2 id{Interval(1, 1), Interval(0, 0), Interval(0, 0), Interval(1, 1)};
    Interval n = inf_norm(id);
    CHECK(n.hi() >= 1.0);
    CHECK(n.hi() <= 1.0 + 1e-15);

    IMatrix2 ones{Interval(-1, 1), Interval(-1, 1), Interval(-1, 1), Interval(-1, 1)};
    Interval n2 = inf_norm(ones);
    CHECK(n2.hi() >= 2.0);
    CHECK(n2.hi() <= 2.0 + 1e-15);
}

TEST_CASE("containment fuzzing: 1e5 samples per op")
{
    std::mt19937_64 rng(20260823);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        Interval X = rand_interval(rng, -10, 10);
        Interval Y = rand_interval(rng, -10, 10);
        double x = rand_in(rng, X), y = rand_in(rng, Y);

        if (!(X + Y).contains(x + y)) ++violations;
        if (!(X - Y).contains(x - y)) ++violations;
        if (!(X * Y).contains(x * y)) ++violations;
        if (!Y.contains_zero() && !(X / Y).contains(x / y)) ++violations;

        if (!sin(X).contains(std::sin(x))) ++violations;
        if (!cos(X).contains(std::cos(x))) ++violations;
        if (!exp(X).contains(std::exp(x))) ++violations;
        if (X.lo() > 0 && !ln(X).contains(std::log(x))) ++violations;
        try {
            Interval t = tan(X);
            if (!t.contains(std::tan(x))) ++violations;
        } catch (const PoleError&) {
        }
        int n = static_cast<int>(i % 7) - 3;
        if (n >= 0 || !X.contains_zero()) {
            if (!pow_int(X, n).contains(std::pow(x, n))) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("monotonicity: 1e4 nested pairs")
{
    std::mt19937_64 rng(77);
    int violations = 0;
    auto sub = [](const Interval& a, const Interval& b) { return a.subset_of(b); };
    for (int i = 0; i < 10000; ++i) {
        Interval X1 = rand_interval(rng, -8, 8), Y1 = rand_interval(rng, -8, 8);
        Interval X = rand_sub(rng, X1), Y = rand_sub(rng, Y1);

        if (!sub(X + Y, X1 + Y1)) ++violations;
        if (!sub(X - Y, X1 - Y1)) ++violations;
        if (!sub(X * Y, X1 * Y1)) ++violations;
        if (!Y1.contains_zero() && !sub(X / Y, X1 / Y1)) ++violations;
        if (!sub(sin(X), sin(X1))) ++violations;
        if (!sub(cos(X), cos(X1))) ++violations;
        if (!sub(exp(X), exp(X1))) ++violations;
        if (X1.lo() > 0 && !sub(ln(X), ln(X1))) ++violations;
        if (!sub(pow_int(X, 3), pow_int(X1, 3))) ++violations;
        if (!sub(pow_int(X, 2), pow_int(X1, 2))) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("determinism")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        Interval X = rand_interval(rng, -20, 20);
        Interval Y = rand_interval(rng, -20, 20);
        CHECK((X * Y) == (X * Y));
        CHECK(sin(X) == sin(X));
        CHECK(exp(X) == exp(X));
    }
}

TEST_CASE("IBox basics")
{
    IBox b(Interval(0, 1), Interval(-1, 1));
    CHECK(b.width() == 2.0);
    CHECK(b.contains(0.5, 0.0));
    IBox c = b.inflated(0.5);
    CHECK(b.strict_subset_of(c));
    CHECK(!IBox::intersect(b, b.translated(5, 0)).has_value());
    auto j = IBox::intersect(b, b.translated(0.5, 0));
    REQUIRE(j.has_value());
    CHECK(j->x.contains(Interval(0.5, 1.0)));
    CHECK(j->x.width() <= 0.5 + 1e-15);
}
