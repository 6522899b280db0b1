#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horseshoe/arrangement.hpp"

using namespace horseshoe;

TEST_CASE("exact predicates") {
    RPoint a{0, 0}, b{1, 0}, c{0, 1};
    CHECK(orient(a, b, c) == 1);
    CHECK(orient(a, c, b) == -1);
    CHECK(orient(a, b, RPoint{2, 0}) == 0);

    RSegment s{{0, 0}, {2, 2}};
    CHECK(on_segment(s, RPoint{1, 1}));
    CHECK(on_segment(s, RPoint{2, 2}));
    CHECK(!on_segment(s, RPoint{1, 0}));
    CHECK(!on_segment(s, RPoint{3, 3}));

    CHECK(classify_cross({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}) == SegCross::Proper);
    CHECK(classify_cross({{0, 0}, {1, 1}}, {{2, 0}, {3, 1}}) == SegCross::None);
    // endpoint touching the other segment's interior
    CHECK(classify_cross({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}) == SegCross::Degenerate);
    RPoint p = cross_point({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
    CHECK(p.x == Rational(1, 2));
    CHECK(p.y == Rational(1, 2));
}

TEST_CASE("polyline basics and serialization") {
    Polyline z = make_polyline({{0, 0}, {1, 0.5}, {2, 0}});
    CHECK(z.segment_count() == 2);
    CHECK(z.min_x() == 0);
    CHECK(z.max_x() == 2);
    CHECK(is_simple(z));
    Polyline bow = make_polyline({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(!is_simple(bow));

    Polyline t = z.translated(Rational(3), Rational(-1));
    CHECK(t.vertices[1] == RPoint{Rational(4), Rational(-1, 2)});
    Polyline r = z.reversed();
    CHECK(r.vertices.front() == z.vertices.back());

    Polyline back = polyline_from_string(polyline_to_string(z));
    REQUIRE(back.vertices.size() == z.vertices.size());
    for (std::size_t i = 0; i < back.vertices.size(); ++i)
        CHECK(back.vertices[i] == z.vertices[i]);
    CHECK(back.closed == z.closed);
}

TEST_CASE("theta of a zigzag against a vertical") {
    Polyline A = make_polyline({{0, 0}, {1, 0.5}, {2, 0}, {3, 0.5}, {3.5, 0.25}});
    Polyline B = make_polyline({{0.25, -1}, {0.25, 1}});
    CHECK(theta(A, B) == 4);
    CHECK(theta_oracle(A, B) == 4);
    CHECK(interval_property(A, B));
    CHECK(theta(B, A) == 4); // symmetry
    CHECK(theta(A.translated(Rational(7)), B) == 4);
    CHECK(theta(A, B.translated(Rational(-3))) == 4);
    CHECK(theta(A.translated(Rational(1, 3)), B.translated(Rational(1, 3))) == 4);
}

TEST_CASE("nu of a horizontal arc against a short vertical") {
    Polyline K = make_polyline({{0.25, 0}, {0.25, 0.5}});
    Polyline L = make_polyline({{0, 0.25}, {2, 0.25}});
    CHECK(nu(L, K) == 1);
    CHECK(nu_oracle(L, K) == 1);
    // deck translations of either arc leave nu unchanged
    CHECK(nu(L.translated(Rational(1)), K) == 1);
    CHECK(nu(L, K.translated(Rational(-2))) == 1);
    CHECK(nu(L.reversed(), K) == -1); // orientation reversal negates nu

    Polyline far = make_polyline({{0, 5}, {2, 5}});
    CHECK_THROWS_AS(nu(far, K), NoIntersection);
    Polyline wide = make_polyline({{0, 0.25}, {1.5, 0.25}});
    CHECK_THROWS_AS(nu(L, wide), DomainError); // second arc must be inessential
}

TEST_CASE("mu of combs across a unit square") {
    Rectangle4 R;
    R.a = make_polyline({{0, 0}, {0, 1}});
    R.Iplus = make_polyline({{0, 1}, {1, 1}});
    R.b = make_polyline({{1, 1}, {1, 0}});
    R.Iminus = make_polyline({{1, 0}, {0, 0}});
    Polyline poly = R.polygon();
    CHECK(poly.closed);
    CHECK(is_simple(poly));
    CHECK(point_in_polygon(poly, RPoint{Rational(1, 2), Rational(1, 2)}) == 1);
    CHECK(point_in_polygon(poly, RPoint{Rational(2), Rational(1, 2)}) == 0);
    CHECK(point_in_polygon(poly, RPoint{Rational(0), Rational(1, 2)}) == 2);

    Polyline C1 = make_polyline({{0.5, -0.5}, {0.5, 1.5}});
    CHECK(mu(R, C1) == 0);
    CHECK(mu_oracle(R, C1) == 0);

    // three crossing prongs at consecutive offsets: I = {2,3,4}
    Polyline C3 = make_polyline({{-1.5, -0.5}, {-1.5, 1.5}, {-2.5, 1.5},
                                 {-2.5, -0.5}, {-3.5, -0.5}, {-3.5, 1.5}});
    CHECK(mu(R, C3) == 2);
    CHECK(mu_oracle(R, C3) == 2);
    std::vector<long> q = mu_offsets(R, C3);
    REQUIRE(q.size() == 3);
    CHECK(q.front() == 2);
    CHECK(q.back() == 4);

    Polyline off = make_polyline({{0.5, 5}, {0.5, 6}});
    CHECK_THROWS_AS(mu(R, off), EmptyI);
}

TEST_CASE("banner homotopic difference") {
    auto square = [](const Rational& x0) {
        Rectangle4 r;
        r.a = Polyline{{{x0, 0}, {x0, 1}}, false};
        r.Iplus = Polyline{{{x0, 1}, {x0 + 1, 1}}, false};
        r.b = Polyline{{{x0 + 1, 1}, {x0 + 1, 0}}, false};
        r.Iminus = Polyline{{{x0 + 1, 0}, {x0, 0}}, false};
        return r;
    };
    Banner b1;
    b1.rect = square(2);
    b1.A = make_polyline({{0, 2}, {1.5, 2}, {1.5, -0.5}, {2, -0.5}, {2, 0}, {2, 1}});
    b1.B = make_polyline({{3, 1}, {3, 0}, {3, -0.5}, {3.5, -0.5}, {3.5, 2}});
    b1.validate();
    Banner b2;
    b2.rect = square(3);
    b2.A = make_polyline({{0, 2}, {2.5, 2}, {2.5, -0.5}, {3, -0.5}, {3, 0}, {3, 1}});
    b2.B = make_polyline({{4, 1}, {4, 0}, {4, -0.5}, {4.5, -0.5}, {4.5, 2}});
    b2.validate();

    CHECK(homotopic_difference(b1, b1) == 0);
    CHECK(homotopic_difference_lower(b1, b1) == 0);
    CHECK(homotopic_difference(b1, b2) == 1);
    CHECK(homotopic_difference_lower(b1, b2) == 1);
    CHECK(homotopic_difference(b2, b1) == -1);
    // initial points are aligned by a deck translation first, so the
    // difference is invariant under translating either banner
    CHECK(homotopic_difference(b1, b2.translated(Rational(5))) == 1);
    CHECK(homotopic_difference(b1.translated(Rational(-2)), b1) == 0);

    // initial points off by a non-integer translation
    Banner bad = b1.translated(Rational(1, 3));
    CHECK_THROWS_AS(homotopic_difference(b1, bad), IncidenceMismatch);

    // broken chain contact: B starting away from the b/I+ corner
    Banner broken = b1;
    broken.B = make_polyline({{3, 0.5}, {3.5, 0.5}, {3.5, 2}});
    CHECK_THROWS_AS(broken.validate(), IncidenceMismatch);
}

TEST_CASE("sep: trivial side and staircase") {
    // x already on the upper side of the barrier: nothing to cross
    Polyline As = make_polyline({{0, 1}, {0, -1}});
    Polyline G = make_polyline({{0, 0}, {1, 0}});
    RPoint x{Rational(0), Rational(1)};
    CHECK(sep(x, As, G, SepSide::Upper) == 0);
    CHECK(sep_oracle(x, As, G, SepSide::Upper) == 0);

    // gamma climbs from lift 0 to lift 3 in shelves; the pockets force a
    // descending path from x through three distinct A-lifts
    Polyline A2 = make_polyline({{0, 0}, {0, -1}});
    Polyline G2 = make_polyline({{0, -0.875}, {0.875, -0.875}, {0.875, -0.625},
                                 {1.75, -0.625}, {1.75, -0.375}, {2.625, -0.375},
                                 {2.625, -0.25}, {3, -0.25}});
    RPoint x2{Rational(0), Rational(0)};
    SepReport up = sep_detail(x2, A2, G2, SepSide::Upper);
    SepReport lo = sep_detail(x2, A2, G2, SepSide::Lower);
    CHECK(up.value == 0);
    CHECK(lo.value == 3);
    CHECK(sep_oracle(x2, A2, G2, SepSide::Upper) == 0);
    CHECK(sep_oracle(x2, A2, G2, SepSide::Lower) == 3);
    CHECK(lo.greedy_bound >= lo.value);
    CHECK(up.lifts == lo.lifts);

    // sep+ + sep- >= |nu(gamma, A)| and here the bound is tight
    int n = nu(G2, A2);
    CHECK(n == 3);
    CHECK(up.value + lo.value >= n);
    CHECK(up.value + lo.value == 3);
}

TEST_CASE("sep error paths") {
    Polyline A = make_polyline({{0, 0}, {0, -1}});
    Polyline G = make_polyline({{0, -0.5}, {1, -0.5}});
    RPoint x{Rational(0), Rational(0)};

    // x not the initial point of A
    CHECK_THROWS_AS(sep(RPoint{Rational(0), Rational(-1)}, A, G, SepSide::Upper),
                    DomainError);
    // gamma endpoint off every lift of A
    Polyline loose = make_polyline({{0, -0.5}, {0.5, -0.3}});
    CHECK_THROWS_AS(sep(x, A, loose, SepSide::Upper), DomainError);
    // gamma running through x itself
    Polyline through = make_polyline({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(sep(RPoint{Rational(0), Rational(0)},
                        make_polyline({{0, 0}, {0, -1}}), through, SepSide::Upper),
                    DegeneratePosition);
    // union that does not separate the ends: gamma stops short of lift 1
    Polyline open_g = make_polyline({{0, -0.5}, {0.5, -0.5}, {0.5, -0.25}, {0, -0.25}});
    CHECK_THROWS_AS(sep(x, A, open_g, SepSide::Lower), NotEssential);
    // too wide a configuration: more lifts than the solver enumerates
    Polyline wide = make_polyline({{0, -0.5}, {20, -0.5}});
    CHECK_THROWS_AS(sep(x, A, wide, SepSide::Upper), TooManyLifts);
}
