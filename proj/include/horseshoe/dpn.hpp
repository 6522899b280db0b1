#ifndef HORSESHOE_DPN_HPP
#define HORSESHOE_DPN_HPP

#include <array>
#include <utility>
#include <vector>

#include "horseshoe/fixed_point.hpp"
#include "horseshoe/orbit.hpp"

namespace horseshoe {

using PointArray = std::vector<std::pair<double, double>>;

// Record of a sampled disjoint-pair-of-neighborhoods check around two
// certified fixed points. B0, B1 are the width-1, height-2 boxes centred
// at the fixed points; the sampled criterion proves every point of the
// four segments stays inside the eps-shrunk boxes for N forward steps,
// and the expansion argument (gap * eta^N < eps) extends that from the
// samples to the full segments.
struct DpnRecord {
    double epsilon = 0.0;
    double delta = 0.0;       // max consecutive sample gap, inf norm
    double eta = 0.0;         // max expansion bound over the inflated boxes
    int N = 0;
    std::size_t sample_count = 0;
    double crude_value = 0.0; // max segment length * eta^N
    bool crude_pass = false;  // the naive analytical bound <= 1/2
    bool pass = false;
    IBox B0, B1;
};

// segments[0], segments[1] run from c0's fixed point; segments[2],
// segments[3] from c1's. Throws GapTooLarge, SampleEscaped, BoxesOverlap
// on failure; the crude-bound outcome is recorded, never thrown.
DpnRecord dpn_check(const MapFamily& F, const FixedPointCert& c0, const FixedPointCert& c1,
                    const std::array<PointArray, 4>& segments, int N, double epsilon);

struct BirkhoffRecord {
    int N = 0;
    IBox U0, U1;
    bool dpn_pass = false;
    int transit01_steps = 0; // point of U0 whose iterate enclosure lands in U1
    int transit10_steps = 0;
    IBox transit01_box, transit10_box;
};

// Verifies the N-d.p.n. property for U0, U1 by direct box iteration
// (every forward image pair disjoint, each union of images inessential)
// and then exhibits transit orbits in both directions by strict
// containment of a point-box iterate in the target box.
BirkhoffRecord verify_birkhoff_related(const MapFamily& F, const FixedPointCert& c0,
                                       const FixedPointCert& c1, const IBox& U0,
                                       const IBox& U1, int N, int max_iter);

} // namespace horseshoe

#endif
