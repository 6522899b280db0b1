#ifndef HORSESHOE_INVARIANTS_HPP
#define HORSESHOE_INVARIANTS_HPP

#include "horseshoe/geometry.hpp"

namespace horseshoe {

// integer floor/ceil of a rational
long r_floor(const Rational& r);
long r_ceil(const Rational& r);

// offsets i with A meeting B+(i,0); both arcs are single lift components
// so their projections are inessential by construction
std::vector<long> intersecting_offsets(const Polyline& A, const Polyline& B);

// #{i : A cap (B+(i,0)) != empty}; bounding-range fast path
int theta(const Polyline& A, const Polyline& B);
// wide-window offset scan without the range prefilter
int theta_oracle(const Polyline& A, const Polyline& B);

// whether the intersecting offsets form a contiguous integer interval
bool interval_property(const Polyline& A, const Polyline& B);

// Lift offset between the first and last visit of A to the translates of
// K. Requires span(K) < 1 so the translates are pairwise disjoint.
int nu(const Polyline& A, const Polyline& K);
int nu_oracle(const Polyline& A, const Polyline& K);

// four boundary chains whose concatenation a . I+ . b . I- closes into a
// simple polygon
struct Rectangle4 {
    Polyline a, Iplus, b, Iminus;
    Polyline polygon() const; // closed concatenation; validates closure
};

// 0 outside, 1 inside, 2 on the boundary; exact half-open ray cast
int point_in_polygon(const Polyline& poly, const RPoint& p);

// the qualifying offsets {i : C+(i,0) crosses R from I+ to I-}
std::vector<long> mu_offsets(const Rectangle4& R, const Polyline& C);
// max I - min I over qualifying offsets; EmptyI if none
int mu(const Rectangle4& R, const Polyline& C);
int mu_oracle(const Rectangle4& R, const Polyline& C);

// Rectangle plus a pair of disjoint approach arcs: A runs from the
// banner's initial point to the corner a cap I+ (= first vertex of I+),
// B runs from the corner b cap I+ (= last vertex of I+) to the final
// point.
struct Banner {
    Rectangle4 rect;
    Polyline A, B;
    RPoint initial_point() const;
    RPoint final_point() const;
    Banner translated(const Rational& dx) const;
    void validate() const; // IncidenceMismatch on broken chain contacts
};

// Integer x-offset between the lifted final points once the lifted
// initial points are aligned; the route through the lower chains must
// agree (checked) or IncidenceMismatch is thrown.
int homotopic_difference(const Banner& b1, const Banner& b2);
// recomputation along the lower-chain route
int homotopic_difference_lower(const Banner& b1, const Banner& b2);

} // namespace horseshoe

#endif
