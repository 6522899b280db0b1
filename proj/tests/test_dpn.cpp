#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "horseshoe/dpn.hpp"

using namespace horseshoe;

namespace {

FixedPointCert fp_origin(const MapFamily& f)
{
    return certify_fixed_point(f, IBox(Interval(-1e-3, 1e-3), Interval(-1e-3, 1e-3)));
}

FixedPointCert fp_height4(const MapFamily& f)
{
    double x0 = std::asin(0.8) / (2 * M_PI);
    return certify_fixed_point(
        f, IBox(Interval(x0 - 1e-3, x0 + 1e-3), Interval(4 - 1e-3, 4 + 1e-3)));
}

// unit vector along the stable eigendirection of the midpoint Jacobian
void stable_direction(const MapFamily& f, double x, double y, double& vx, double& vy)
{
    IMatrix2 J = f.jacobian(IBox(Interval(x), Interval(y)));
    double a11 = J.a11.mid(), a12 = J.a12.mid(), a21 = J.a21.mid(), a22 = J.a22.mid();
    double tr = a11 + a22, det = a11 * a22 - a12 * a21;
    double ls = (tr - std::sqrt(tr * tr - 4 * det)) / 2; // smaller eigenvalue
    vx = a12;
    vy = ls - a11;
    double n = std::max(std::fabs(vx), std::fabs(vy));
    vx /= n;
    vy /= n;
}

PointArray ray_segment(double x, double y, double vx, double vy, double len, int m)
{
    PointArray s;
    for (int k = 0; k < m; ++k) {
        double t = len * k / (m - 1);
        s.emplace_back(x + t * vx, y + t * vy);
    }
    return s;
}

// hand-built certificate for testing box geometry only
FixedPointCert fake_cert(double x, double y)
{
    FixedPointCert c;
    c.box = IBox(Interval(x), Interval(y));
    c.rotation = 0;
    c.family = "test";
    c.method = "krawczyk";
    c.newton_radius_ratio = 0.0;
    c.existence_only = false;
    return c;
}

} // namespace

TEST_CASE("degenerate single-point segments at the fixed points pass")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fp_origin(f), c1 = fp_height4(f);
    std::array<PointArray, 4> segs{
        PointArray{{c0.box.x.mid(), c0.box.y.mid()}},
        PointArray{{c0.box.x.mid(), c0.box.y.mid()}},
        PointArray{{c1.box.x.mid(), c1.box.y.mid()}},
        PointArray{{c1.box.x.mid(), c1.box.y.mid()}}};
    DpnRecord rec = dpn_check(f, c0, c1, segs, 3, 0.05);
    CHECK(rec.pass);
    CHECK(rec.sample_count == 4);
    CHECK(rec.delta == 0.0);
    CHECK(rec.eta > 1.0);
    CHECK(rec.B0.x.width() == doctest::Approx(1.0));
    CHECK(rec.B0.y.width() == doctest::Approx(2.0));
    CHECK(rec.crude_pass); // zero-length segments trivially satisfy the bound

    // monotone in epsilon while the shrunk boxes stay disjoint
    DpnRecord rec2 = dpn_check(f, c0, c1, segs, 3, 0.2);
    CHECK(rec2.pass);
}

TEST_CASE("crude bound fails while the sampled criterion passes")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fp_origin(f), c1 = fp_height4(f);
    const double len = 1e-4;
    const int m = 64;
    std::array<PointArray, 4> segs;
    const FixedPointCert* cs[2] = {&c0, &c1};
    for (int i = 0; i < 2; ++i) {
        double x = cs[i]->box.x.mid(), y = cs[i]->box.y.mid(), vx, vy;
        stable_direction(f, x, y, vx, vy);
        segs[2 * i] = ray_segment(x, y, vx, vy, len, m);
        segs[2 * i + 1] = ray_segment(x, y, -vx, -vy, len, m);
    }
    DpnRecord rec = dpn_check(f, c0, c1, segs, 3, 0.05);
    CHECK(rec.pass);
    CHECK(!rec.crude_pass);
    CHECK(rec.crude_value > 0.5);
    CHECK(rec.delta * std::pow(rec.eta, 3) < 0.05);
}

TEST_CASE("gap too large is rejected before sampling")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fp_origin(f), c1 = fp_height4(f);
    PointArray coarse{{0.0, 0.0}, {0.0, 0.01}};
    std::array<PointArray, 4> segs{coarse, PointArray{{0.0, 0.0}},
                                   PointArray{{c1.box.x.mid(), c1.box.y.mid()}},
                                   PointArray{{c1.box.x.mid(), c1.box.y.mid()}}};
    CHECK_THROWS_AS(dpn_check(f, c0, c1, segs, 3, 0.05), GapTooLarge);
}

TEST_CASE("a segment along the unstable direction escapes")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fp_origin(f), c1 = fp_height4(f);
    PointArray up;
    const int m = 10000;
    for (int k = 0; k < m; ++k) up.emplace_back(0.0, 0.02 * k / (m - 1));
    std::array<PointArray, 4> segs{up, PointArray{{0.0, 0.0}},
                                   PointArray{{c1.box.x.mid(), c1.box.y.mid()}},
                                   PointArray{{c1.box.x.mid(), c1.box.y.mid()}}};
    CHECK_THROWS_AS(dpn_check(f, c0, c1, segs, 3, 0.05), SampleEscaped);
}

TEST_CASE("overlapping neighborhood boxes are rejected")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fake_cert(0.0, 0.0), c1 = fake_cert(0.3, 1.2);
    std::array<PointArray, 4> segs{PointArray{{0.0, 0.0}}, PointArray{{0.0, 0.0}},
                                   PointArray{{0.3, 1.2}}, PointArray{{0.3, 1.2}}};
    CHECK_THROWS_AS(dpn_check(f, c0, c1, segs, 3, 0.05), BoxesOverlap);
}

TEST_CASE("birkhoff relation along a period-4 cycle of the twist family")
{
    MapFamily f = MapFamily::generalized(parse_expr("y"), parse_expr("x"));
    // genuine period-4 orbit (rotation 6 per period); points 0 and 2 of the
    // cycle serve as the two neighborhoods
    double p0x = 0.11808894340320086, p0y = 1.8378724301439162;
    double p2x = 3.5206483948297844 - 3.0, p2y = 1.4353129787173258;
    FixedPointCert c0 = fake_cert(p0x, p0y), c1 = fake_cert(p2x, p2y);
    IBox U0(Interval(p0x - 0.005, p0x + 0.005), Interval(p0y - 0.005, p0y + 0.005));
    IBox U1(Interval(p2x - 0.005, p2x + 0.005), Interval(p2y - 0.005, p2y + 0.005));
    BirkhoffRecord rec = verify_birkhoff_related(f, c0, c1, U0, U1, 1, 4);
    CHECK(rec.dpn_pass);
    CHECK(rec.transit01_steps == 2);
    CHECK(rec.transit10_steps == 2);
    CHECK(U1.contains(rec.transit01_box));
    CHECK(U0.contains(rec.transit10_box));
}

TEST_CASE("far-separated fixed-point neighborhoods never transit")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fp_origin(f), c1 = fp_height4(f);
    IBox U0 = c0.box.inflated(1e-6), U1 = c1.box.inflated(1e-6);
    // the d.p.n. part holds (a DpnFailure would be thrown instead)
    CHECK_THROWS_AS(verify_birkhoff_related(f, c0, c1, U0, U1, 3, 3), NoTransitFound);
}

TEST_CASE("validation errors")
{
    MapFamily f = MapFamily::dissipative(Interval(3.0), Interval(0.8));
    FixedPointCert c0 = fp_origin(f), c1 = fp_height4(f);
    IBox far(Interval(0.3, 0.31), Interval(0.3, 0.31));
    CHECK_THROWS_AS(verify_birkhoff_related(f, c0, c1, far, c1.box.inflated(1e-6), 3, 3),
                    DomainError);
    std::array<PointArray, 4> segs{PointArray{{0.0, 0.0}}, PointArray{}, PointArray{{0.0, 4.0}},
                                   PointArray{{0.0, 4.0}}};
    CHECK_THROWS_AS(dpn_check(f, c0, c1, segs, 3, 0.05), DomainError);
    segs[1] = PointArray{{0.0, 0.0}};
    CHECK_THROWS_AS(dpn_check(f, c0, c1, segs, 0, 0.05), DomainError);
    CHECK_THROWS_AS(dpn_check(f, c0, c1, segs, 3, 0.0), DomainError);
}
