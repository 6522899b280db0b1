#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "horseshoe/fixed_point.hpp"

using namespace horseshoe;

TEST_CASE("origin fixed point of the dissipative family")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    IBox seed(Interval(-1e-3, 1e-3), Interval(-1e-3, 1e-3));
    FixedPointCert c = certify_fixed_point(f, seed);
    CHECK(c.rotation == 0);
    CHECK(c.method == "krawczyk");
    CHECK(c.box.contains(0.0, 0.0));
    CHECK(c.box.width() <= 1e-6);
    CHECK(c.newton_radius_ratio < 1.0);
    CHECK(!c.existence_only);
}

TEST_CASE("rotation-12 fixed point at height 4")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    // sin(2*pi*x) = (1-b)*y = 0.8 at y = 4
    double x0 = std::asin(0.8) / (2 * M_PI);
    IBox seed(Interval(x0 - 1e-3, x0 + 1e-3), Interval(4 - 1e-3, 4 + 1e-3));
    FixedPointCert c1 = certify_fixed_point(f, seed);
    CHECK(c1.rotation == 12);
    CHECK(c1.box.width() <= 1e-6);

    FixedPointCert c0 = certify_fixed_point(f, IBox(Interval(-1e-3, 1e-3), Interval(-1e-3, 1e-3)));
    CHECK(rotational_difference(c0, c1) == 12);
    CHECK(rotational_difference(c0, c0) == 0);
}

TEST_CASE("midpoint residual consistency")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    double x0 = std::asin(0.8) / (2 * M_PI);
    FixedPointCert c = certify_fixed_point(
        f, IBox(Interval(x0 - 1e-3, x0 + 1e-3), Interval(4 - 1e-3, 4 + 1e-3)));
    double X, Y;
    f.eval_pt(c.box.x.mid(), c.box.y.mid(), X, Y);
    CHECK(std::fabs(X - c.box.x.mid() - c.rotation) < c.box.width() + 1e-12);
    CHECK(std::fabs(Y - c.box.y.mid()) < c.box.width() + 1e-12);
}

TEST_CASE("twist family rotation +-1 pair")
{
    MapFamily f = MapFamily::generalized(parse_expr("y"), parse_expr("x"));
    FixedPointCert cp = certify_fixed_point(f, IBox(Interval(-0.01, 0.01), Interval(0.99, 1.01)));
    FixedPointCert cm = certify_fixed_point(f, IBox(Interval(-0.01, 0.01), Interval(-1.01, -0.99)));
    CHECK(cp.rotation == 1);
    CHECK(cm.rotation == -1);
    CHECK(rotational_difference(cm, cp) == 2);
    CHECK(cp.method == "krawczyk");
}

TEST_CASE("tangential fixed points of a non-twist family")
{
    MapFamily f = MapFamily::generalized(parse_expr("sin(2*pi*y)"), parse_expr("x"));
    // rotation +1 at the critical height y = 1/4
    FixedPointCert cp = certify_fixed_point(
        f, IBox(Interval(-0.01, 0.01), Interval(0.24, 0.26)), 1);
    CHECK(cp.rotation == 1);
    CHECK(cp.method == "tangential");
    CHECK(cp.existence_only);
    CHECK(cp.box.y.contains(0.25));
    CHECK(cp.box.x.contains(0.0));

    FixedPointCert cm = certify_fixed_point(
        f, IBox(Interval(-0.01, 0.01), Interval(-0.26, -0.24)), -1);
    CHECK(cm.rotation == -1);
    CHECK(rotational_difference(cm, cp) == 2);
}

TEST_CASE("family mismatch is rejected")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    MapFamily g = MapFamily::dissipative(Interval(3.0), Interval(0.7));
    FixedPointCert a = certify_fixed_point(f, IBox(Interval(-1e-3, 1e-3), Interval(-1e-3, 1e-3)));
    FixedPointCert b = certify_fixed_point(g, IBox(Interval(-1e-3, 1e-3), Interval(-1e-3, 1e-3)));
    CHECK_THROWS_AS(rotational_difference(a, b), FamilyMismatch);
}

TEST_CASE("failure modes")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    // a seed far from any fixed point, with a hint that contradicts the
    // polished displacement, cannot certify
    CHECK_THROWS_AS(certify_fixed_point(
                        f, IBox(Interval(10.0, 12.0), Interval(-4.0, 4.0))),
                    AmbiguousRotation);

    // integrable case v == 0: a whole circle of fixed points, nothing to
    // isolate
    MapFamily g = MapFamily::generalized(parse_expr("y"), parse_expr("0*x"));
    CHECK_THROWS_AS(certify_fixed_point(g, IBox(Interval(0.19, 0.21), Interval(-0.01, 0.01)), 0),
                    SingularJacobian);
}
