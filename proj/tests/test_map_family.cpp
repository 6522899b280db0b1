#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horseshoe/map_family.hpp"

using namespace horseshoe;

namespace {

// dyadic coordinates (multiples of 2^-30) keep integer deck shifts exact
double dyadic(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> d(lo, hi);
    return std::round(d(rng) * 1073741824.0) / 1073741824.0;
}

IBox rand_box(std::mt19937_64& rng, double span)
{
    double x0 = dyadic(rng, 0.0, 0.9), y0 = dyadic(rng, -2.0, 2.0);
    double wx = dyadic(rng, 0.0, span), wy = dyadic(rng, 0.0, span);
    return IBox(Interval(x0, x0 + wx), Interval(y0, y0 + wy));
}

MapFamily std_dissipative()
{
    return MapFamily::dissipative(Interval(3.0), Interval(0.8));
}

MapFamily twist_identity()
{
    return MapFamily::generalized(parse_expr("y"), parse_expr("x"));
}

} // namespace

TEST_CASE("dissipative lift fixes the origin")
{
    MapFamily f = std_dissipative();
    IBox img = f.eval_lift(IBox(Interval(0.0), Interval(0.0)));
    CHECK(img.contains(0.0, 0.0));
    CHECK(img.width() <= 1e-14);
}

TEST_CASE("generalized lift point image")
{
    MapFamily f = twist_identity();
    CHECK(std::fabs(f.mean().mid()) < 1e-3);
    // (0,1) -> (1, 1 + v(sin(2*pi))) with v(s) ~ s
    IBox img = f.eval_lift(IBox(Interval(0.0), Interval(1.0)));
    CHECK(img.contains(1.0, 1.0));
    CHECK(img.width() <= 1e-2);
}

TEST_CASE("eval containment fuzzing")
{
    std::mt19937_64 rng(101);
    MapFamily fd = std_dissipative();
    MapFamily fg = MapFamily::generalized(parse_expr("y"), parse_expr("x*(1-x)"));
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        IBox B = rand_box(rng, 0.2);
        std::uniform_real_distribution<double> dx(B.x.lo(), B.x.hi());
        std::uniform_real_distribution<double> dy(B.y.lo(), B.y.hi());
        double x = dx(rng), y = dy(rng), X, Y;
        for (const MapFamily* f : {&fd, &fg}) {
            f->eval_pt(x, y, X, Y);
            IBox img = f->eval_lift(B);
            // pointwise double evaluation can itself round by ~1 ulp
            if (!img.inflated(1e-9).contains(X, Y)) ++violations;
            f->eval_pt_inverse(x, y, X, Y);
            IBox pre = f->eval_lift_inverse(B);
            if (!pre.inflated(1e-9).contains(X, Y)) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("inverse consistency: B inside F^-1(F(B))")
{
    std::mt19937_64 rng(102);
    MapFamily fd = std_dissipative();
    MapFamily fg = MapFamily::generalized(parse_expr("y"), parse_expr("x"));
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        IBox B = rand_box(rng, 0.01);
        for (const MapFamily* f : {&fd, &fg}) {
            IBox rt = f->eval_lift_inverse(f->eval_lift(B));
            if (!rt.contains(B)) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("deck commutation is bit-exact")
{
    std::mt19937_64 rng(103);
    MapFamily fd = std_dissipative();
    MapFamily fg = MapFamily::generalized(parse_expr("sin(2*pi*y)"), parse_expr("x"));
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        IBox B = rand_box(rng, 0.3);
        for (const MapFamily* f : {&fd, &fg}) {
            for (double k : {1.0, 2.0, -3.0}) {
                IBox lhs = f->eval_lift(shift_x(B, k));
                IBox rhs = shift_x(f->eval_lift(B), k);
                if (!(lhs == rhs)) ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("jacobian symbolic form and finite differences")
{
    MapFamily f = std_dissipative();
    IBox B(Interval(0.1, 0.2), Interval(0.3, 0.4));
    IMatrix2 J = f.jacobian(B);
    CHECK(J.a11.contains(1.0));
    CHECK(J.a12.contains(3.0));

    std::mt19937_64 rng(104);
    MapFamily fg = MapFamily::generalized(parse_expr("y"), parse_expr("x"));
    int violations = 0;
    for (const MapFamily* fam : {&f, &fg}) {
        for (int i = 0; i < 1000; ++i) {
            double x = dyadic(rng, 0.0, 1.0), y = dyadic(rng, -1.0, 1.0);
            double h = 1e-6;
            double X1, Y1, X2, Y2;
            IMatrix2 Jp = fam->jacobian(IBox(Interval(x), Interval(y)));
            fam->eval_pt(x + h, y, X1, Y1);
            fam->eval_pt(x - h, y, X2, Y2);
            if (std::fabs((X1 - X2) / (2 * h) - Jp.a11.mid()) > 1e-4) ++violations;
            if (std::fabs((Y1 - Y2) / (2 * h) - Jp.a21.mid()) > 1e-4) ++violations;
            fam->eval_pt(x, y + h, X1, Y1);
            fam->eval_pt(x, y - h, X2, Y2);
            if (std::fabs((X1 - X2) / (2 * h) - Jp.a12.mid()) > 1e-4) ++violations;
            if (std::fabs((Y1 - Y2) / (2 * h) - Jp.a22.mid()) > 1e-4) ++violations;
        }
    }
    CHECK(violations == 0);

    // at a thin box around the origin the twist family is the standard map
    IMatrix2 Js = fg.jacobian(IBox(Interval(0.0), Interval(0.0)));
    CHECK(Js.a11.contains(1.0));
    CHECK(Js.a12.contains(1.0));
    CHECK(Js.a21.contains(2.0 * M_PI));
    CHECK(Js.a22.contains(1.0 + 2.0 * M_PI));
}

TEST_CASE("expansion bound")
{
    MapFamily f = std_dissipative();
    IBox check_box(Interval(-0.5, 0.5), Interval(-1.0, 1.0));
    double eta = f.expansion_bound(check_box);
    CHECK(eta >= 4.0); // row one sums to 1 + a
    CHECK(eta <= 40.0);

    // shrinking the box cannot increase the bound
    double eta2 = f.expansion_bound(IBox(Interval(-0.1, 0.1), Interval(-0.2, 0.2)));
    CHECK(eta2 <= eta);

    // sampled norms stay below the bound
    std::mt19937_64 rng(105);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        std::uniform_real_distribution<double> dx(-0.5, 0.5), dy(-1.0, 1.0);
        double x = dx(rng), y = dy(rng);
        double u = x + 3.0 * y, c = std::cos(2 * M_PI * u);
        double r1 = 1.0 + 3.0;
        double r2 = std::fabs(2 * M_PI * c) + std::fabs(0.8 + 3.0 * 2 * M_PI * c);
        if (std::max(r1, r2) > eta) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("vertical displacement bounds")
{
    MapFamily fg = twist_identity();
    double nl2 = fg.vertical_displacement_bound(5.0);
    CHECK(nl2 <= 1.001);
    CHECK(nl2 >= 0.99);

    MapFamily fd = std_dissipative();
    double nd = fd.vertical_displacement_bound(6.0, 64);
    CHECK(nd <= (1.0 - 0.8) * 6.0 + 1.0 + 0.05);
    CHECK(nd >= 2.0);

    // sampled displacements below the bound
    std::mt19937_64 rng(106);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        std::uniform_real_distribution<double> dx(0.0, 1.0), dy(-6.0, 6.0);
        double x = dx(rng), y = dy(rng), X, Y;
        fd.eval_pt(x, y, X, Y);
        if (std::fabs(Y - y) > nd) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("mean quadrature")
{
    Interval m = mean_quadrature(parse_expr("x"), 4096);
    CHECK(m.contains(0.0));
    CHECK(m.width() <= 1e-3);

    // w = x(1-x): integral of sin - sin^2 over one period = -1/2
    Interval m2 = mean_quadrature(parse_expr("x*(1-x)"), 8192);
    CHECK(m2.contains(-0.5));
    CHECK(m2.width() <= 1e-2);

    // refinement never widens
    double prev = 1e9;
    for (int n : {64, 128, 256, 512, 1024, 2048}) {
        Interval mm = mean_quadrature(parse_expr("x*(1-x)"), n);
        CHECK(mm.width() <= prev);
        prev = mm.width();
        CHECK(mm.contains(-0.5));
    }
}

TEST_CASE("family preconditions")
{
    CHECK_THROWS_AS(MapFamily::dissipative(Interval(3.0), Interval(1.2)), DomainError);
    CHECK_THROWS_AS(MapFamily::dissipative(Interval(3.0), Interval(0.0, 0.5)), DomainError);
    // h with range too small cannot cover [-1,1]
    CHECK_THROWS_AS(MapFamily::generalized(parse_expr("y/10"), parse_expr("x")), DomainError);
    // boundary-attaining h accepted but flagged
    MapFamily f = MapFamily::generalized(parse_expr("sin(2*pi*y)"), parse_expr("x"));
    CHECK(!f.range_condition_strict());
    MapFamily g = MapFamily::generalized(parse_expr("3*y"), parse_expr("x"));
    CHECK(g.range_condition_strict());
}
