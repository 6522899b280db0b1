#ifndef HORSESHOE_GEOMETRY_HPP
#define HORSESHOE_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "horseshoe/errors.hpp"

namespace horseshoe {

using Rational = boost::multiprecision::cpp_rational;

struct RPoint {
    Rational x, y;
    bool operator==(const RPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RPoint& o) const { return !(*this == o); }
};

RPoint operator+(const RPoint& a, const RPoint& b);
RPoint operator-(const RPoint& a, const RPoint& b);

// lexicographic (x, then y); used for deterministic normalization
bool lex_less(const RPoint& a, const RPoint& b);

// sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear
int orient(const RPoint& a, const RPoint& b, const RPoint& c);

struct RSegment {
    RPoint p, q;
};

// Exact segment intersection classification. Proper means a single
// transverse interior-interior crossing.
enum class SegCross { None, Proper, Degenerate };
SegCross classify_cross(const RSegment& s, const RSegment& t);

// interior-or-endpoint containment of a point on a segment
bool on_segment(const RSegment& s, const RPoint& p);

// the unique crossing point of a properly crossing pair
RPoint cross_point(const RSegment& s, const RSegment& t);

// Open polyline arc (or closed loop) in the lift plane with exact
// rational vertices. Simplicity and general position are preconditions
// of the invariant computations and are checked there, not assumed.
struct Polyline {
    std::vector<RPoint> vertices;
    bool closed = false;

    std::size_t segment_count() const;
    RSegment segment(std::size_t i) const;
    Rational min_x() const;
    Rational max_x() const;
    Polyline translated(const Rational& dx, const Rational& dy = 0) const;
    Polyline reversed() const;
};

Polyline make_polyline(std::initializer_list<std::pair<double, double>> pts,
                       bool closed = false);

// consecutive-duplicate check plus exact pairwise self-crossing scan
bool is_simple(const Polyline& p);

// Do the two polylines meet? Throws DegeneratePosition on touching or
// collinear-overlap contact (transverse crossings and shared declared
// endpoints only).
bool polylines_meet(const Polyline& a, const Polyline& b);

// All proper pairwise crossings, unordered. Degenerate contact throws.
std::vector<RPoint> crossing_points(const Polyline& a, const Polyline& b);

// JSON-ish serialization: arrays of [x, y] rational strings
std::string polyline_to_string(const Polyline& p);
Polyline polyline_from_string(const std::string& s);

} // namespace horseshoe

#endif
