#ifndef HORSESHOE_ORBIT_HPP
#define HORSESHOE_ORBIT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "horseshoe/map_family.hpp"

namespace horseshoe {

enum class Direction { Forward, Backward };

struct SubdivisionPolicy {
    double width_threshold = 1e-3;
    int max_pieces = 16384;
    double blowup_limit = 10.0;
};

// Validated orbit segment: boxes[k] encloses f^{+-k}(p) for every p in
// seed. Internally pieces are propagated independently and hulled per
// step; the per-step hull chain satisfies eval(boxes[k]) containing
// boxes[k+1] by inclusion monotonicity, so a stored orbit is
// re-checkable without the piece bookkeeping.
struct OrbitEnclosure {
    Direction direction = Direction::Forward;
    IBox seed;
    std::vector<IBox> boxes; // boxes[0] == seed, size n+1
    std::vector<std::pair<int, int>> subdivision_events; // (step, pieces)
};

OrbitEnclosure enclose_orbit(const MapFamily& F, const IBox& seed, int n,
                             Direction dir, SubdivisionPolicy policy = {});

enum class Side { Above, Below };

// first step whose box lies entirely above `level` (lo > level) or
// entirely below `-level` (hi < -level)
std::optional<int> crossing_check(const OrbitEnclosure& orb, double level, Side side);

} // namespace horseshoe

#endif
