#include "horseshoe/orbit.hpp"

#include <deque>
#include <string>

namespace horseshoe {

namespace {

void bisect(const IBox& b, IBox& lo, IBox& hi)
{
    if (b.x.width() >= b.y.width()) {
        double m = b.x.mid();
        lo = IBox(Interval(b.x.lo(), m), b.y);
        hi = IBox(Interval(m, b.x.hi()), b.y);
    } else {
        double m = b.y.mid();
        lo = IBox(b.x, Interval(b.y.lo(), m));
        hi = IBox(b.x, Interval(m, b.y.hi()));
    }
}

} // namespace

OrbitEnclosure enclose_orbit(const MapFamily& F, const IBox& seed, int n,
                             Direction dir, SubdivisionPolicy policy)
{
    if (n < 0) throw DomainError("enclose_orbit requires n >= 0");
    if (!seed.is_finite()) throw NonFiniteError("enclose_orbit: non-finite seed");

    OrbitEnclosure orb;
    orb.direction = dir;
    orb.seed = seed;
    orb.boxes.push_back(seed);

    std::vector<IBox> pieces{seed};
    for (int step = 1; step <= n; ++step) {
        // split oversized pieces first so images stay tight
        std::deque<IBox> work(pieces.begin(), pieces.end());
        std::vector<IBox> ready;
        while (!work.empty()) {
            IBox b = work.front();
            work.pop_front();
            if (b.width() > policy.width_threshold &&
                static_cast<int>(work.size() + ready.size()) + 1 < policy.max_pieces) {
                IBox lo, hi;
                bisect(b, lo, hi);
                work.push_back(lo);
                work.push_back(hi);
            } else {
                ready.push_back(b);
            }
        }
        if (ready.size() != pieces.size())
            orb.subdivision_events.emplace_back(step, static_cast<int>(ready.size()));

        std::vector<IBox> images;
        images.reserve(ready.size());
        for (const IBox& b : ready)
            images.push_back(dir == Direction::Forward ? F.eval_lift(b)
                                                       : F.eval_lift_inverse(b));

        IBox hull = images.front();
        for (std::size_t i = 1; i < images.size(); ++i) hull = IBox::hull(hull, images[i]);
        if (hull.width() > policy.blowup_limit)
            throw BlowupError("orbit enclosure width " + std::to_string(hull.width()) +
                              " exceeded blowup limit at step " + std::to_string(step));
        orb.boxes.push_back(hull);
        pieces = std::move(images);
    }
    return orb;
}

std::optional<int> crossing_check(const OrbitEnclosure& orb, double level, Side side)
{
    for (std::size_t k = 0; k < orb.boxes.size(); ++k) {
        const Interval& y = orb.boxes[k].y;
        if (side == Side::Above && y.lo() > level) return static_cast<int>(k);
        if (side == Side::Below && y.hi() < -level) return static_cast<int>(k);
    }
    return std::nullopt;
}

} // namespace horseshoe
