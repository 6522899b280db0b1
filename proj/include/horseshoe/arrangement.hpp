#ifndef HORSESHOE_ARRANGEMENT_HPP
#define HORSESHOE_ARRANGEMENT_HPP

#include "horseshoe/invariants.hpp"

namespace horseshoe {

enum class SepSide { Upper, Lower };

struct SepReport {
    int value = 0;           // minimum over admissible crossing sets
    int greedy_bound = 0;    // fewest-crossings path bound used to prune
    int lifts = 0;           // A-lift translates in the strip
    int faces = 0;           // arrangement faces explored
};

// Minimum number of distinct A-lift translates an arc from x to the
// chosen end must touch while avoiding every lift of gamma. Computed on
// the exact arrangement of the lifts in a bounded strip; crossing-set
// minimality comes from subset enumeration over the <= 16 lifts with a
// fewest-crossings path as upper bound.
SepReport sep_detail(const RPoint& x, const Polyline& A, const Polyline& gamma,
                     SepSide side);
int sep(const RPoint& x, const Polyline& A, const Polyline& gamma, SepSide side);

// plain full subset enumeration, no pruning bound
int sep_oracle(const RPoint& x, const Polyline& A, const Polyline& gamma,
               SepSide side);

} // namespace horseshoe

#endif
