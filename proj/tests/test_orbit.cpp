#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horseshoe/orbit.hpp"

using namespace horseshoe;

TEST_CASE("zero steps returns the seed")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    IBox seed(Interval(0.1, 0.2), Interval(0.0, 0.1));
    OrbitEnclosure orb = enclose_orbit(f, seed, 0, Direction::Forward);
    REQUIRE(orb.boxes.size() == 1);
    CHECK(orb.boxes[0] == seed);
}

TEST_CASE("orbit of a fixed point stays put")
{
    // (0,0) is a saddle with unstable eigenvalue ~20, so a thin seed box
    // stretches by that factor per step; pick n so the enclosure stays tiny
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    IBox seed(Interval(-1e-13, 1e-13), Interval(-1e-13, 1e-13));
    OrbitEnclosure orb = enclose_orbit(f, seed, 7, Direction::Forward);
    for (const IBox& b : orb.boxes) CHECK(b.contains(0.0, 0.0));
    CHECK(orb.boxes.back().width() < 1e-3);
}

TEST_CASE("soundness sampling against double-precision orbits")
{
    std::mt19937_64 rng(42);
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    MapFamily g = MapFamily::generalized(parse_expr("y"), parse_expr("x"));
    for (const MapFamily* fam : {&f, &g}) {
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
            IBox seed(Interval(0.3, 0.300001), Interval(0.5, 0.500001));
            int n = 5;
            OrbitEnclosure orb = enclose_orbit(*fam, seed, n, dir);
            int violations = 0;
            for (int s = 0; s < 1000; ++s) {
                std::uniform_real_distribution<double> dx(seed.x.lo(), seed.x.hi());
                std::uniform_real_distribution<double> dy(seed.y.lo(), seed.y.hi());
                double x = dx(rng), y = dy(rng);
                for (int k = 0; k <= n; ++k) {
                    if (!orb.boxes[k].inflated(1e-9).contains(x, y)) ++violations;
                    double X, Y;
                    if (dir == Direction::Forward) fam->eval_pt(x, y, X, Y);
                    else fam->eval_pt_inverse(x, y, X, Y);
                    x = X;
                    y = Y;
                }
            }
            CHECK(violations == 0);
        }
    }
}

TEST_CASE("chain property: each box maps into the next")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    IBox seed(Interval(0.4, 0.400001), Interval(-0.2, -0.199999));
    OrbitEnclosure orb = enclose_orbit(f, seed, 5, Direction::Backward);
    for (std::size_t k = 0; k + 1 < orb.boxes.size(); ++k) {
        IBox img = f.eval_lift_inverse(orb.boxes[k]);
        CHECK(img.contains(orb.boxes[k + 1]));
    }
}

TEST_CASE("subdivision tightens wide seeds")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    IBox seed(Interval(0.0, 0.01), Interval(0.0, 0.01));
    OrbitEnclosure orb = enclose_orbit(f, seed, 2, Direction::Forward);
    CHECK(!orb.subdivision_events.empty());
    CHECK(orb.boxes.back().is_finite());

    SubdivisionPolicy no_split;
    no_split.max_pieces = 1;
    OrbitEnclosure crude = enclose_orbit(f, seed, 2, Direction::Forward, no_split);
    CHECK(orb.boxes.back().width() < crude.boxes.back().width());

    // without subdivision a longer run must blow up
    CHECK_THROWS_AS(enclose_orbit(f, seed, 8, Direction::Forward, no_split), BlowupError);
}

TEST_CASE("crossing_check")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    OrbitEnclosure orb = enclose_orbit(f, IBox(Interval(-1e-13, 1e-13), Interval(-1e-13, 1e-13)),
                                       7, Direction::Forward);
    CHECK(!crossing_check(orb, 6.0, Side::Above).has_value());
    CHECK(!crossing_check(orb, 6.0, Side::Below).has_value());

    OrbitEnclosure fake;
    fake.boxes.push_back(IBox(Interval(0.0), Interval(0.0, 1.0)));
    fake.boxes.push_back(IBox(Interval(0.0), Interval(6.01, 6.5)));
    auto k = crossing_check(fake, 6.0, Side::Above);
    REQUIRE(k.has_value());
    CHECK(*k == 1);
    CHECK(!crossing_check(fake, 6.0, Side::Below).has_value());

    // monotone in level for the above case
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        OrbitEnclosure o;
        std::uniform_real_distribution<double> d(-8.0, 8.0);
        for (int i = 0; i < 20; ++i) {
            double a = d(rng), b = d(rng);
            if (a > b) std::swap(a, b);
            o.boxes.push_back(IBox(Interval(0.0), Interval(a, b)));
        }
        auto hi = crossing_check(o, 5.0, Side::Above);
        auto lo = crossing_check(o, 3.0, Side::Above);
        if (hi.has_value()) {
            REQUIRE(lo.has_value());
            CHECK(*lo <= *hi);
        }
    }
}

TEST_CASE("validation errors")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    CHECK_THROWS_AS(enclose_orbit(f, IBox(Interval(0.0), Interval(0.0)), -1, Direction::Forward),
                    DomainError);
}
