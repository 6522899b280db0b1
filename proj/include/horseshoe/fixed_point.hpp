#ifndef HORSESHOE_FIXED_POINT_HPP
#define HORSESHOE_FIXED_POINT_HPP

#include <optional>
#include <string>

#include "horseshoe/map_family.hpp"

namespace horseshoe {

// stable textual identity of a family instance (also used in certificates)
std::string family_id(const MapFamily& F);

// A box proven to contain a fixed point of the annulus map with integer
// rotation vector `rotation`. method == "krawczyk": existence and
// uniqueness in the box by the Krawczyk inclusion test. method ==
// "tangential": product-structure certificate for rotation-extremal fixed
// points of the generalized family where the Jacobian of the fixed-point
// system is structurally singular (h'(y) = 0 at the certified height);
// the x-equation zero is unique by 1-D interval Newton, the y-equation
// existence rests on the declared range condition [-1,1] within h([-1,1]).
struct FixedPointCert {
    IBox box;
    int rotation = 0;
    std::string family;
    std::string method;
    double newton_radius_ratio = 0.0;
    bool existence_only = false;
};

FixedPointCert certify_fixed_point(const MapFamily& F, const IBox& seed,
                                   std::optional<int> p_hint = std::nullopt);

int rotational_difference(const FixedPointCert& c0, const FixedPointCert& c1);

// Deterministic audit of a stored certificate against its family: replays
// the inclusion test on the stored box (no polish, no radius search).
// Returns false on any discrepancy, including a family-id mismatch.
bool recheck_fixed_point(const MapFamily& F, const FixedPointCert& c);

} // namespace horseshoe

#endif
