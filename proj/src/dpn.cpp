#include "horseshoe/dpn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace horseshoe {

namespace {

IBox centered_box(const IBox& fp, double hw, double hh)
{
    double cx = fp.x.mid(), cy = fp.y.mid();
    return IBox(Interval(cx - hw, cx + hw), Interval(cy - hh, cy + hh));
}

// Disjointness of the annulus projections: the lift boxes must miss every
// integer horizontal translate of each other. Only finitely many
// translates can touch.
bool boxes_disjoint(const IBox& a, const IBox& b)
{
    if (!Interval::intersect(a.y, b.y).has_value()) return true;
    long k_lo = static_cast<long>(std::floor(b.x.lo() - a.x.hi())) - 1;
    long k_hi = static_cast<long>(std::ceil(b.x.hi() - a.x.lo())) + 1;
    for (long k = k_lo; k <= k_hi; ++k)
        if (Interval::intersect(shift_interval(a.x, static_cast<double>(k)), b.x).has_value())
            return false;
    return true;
}

double segment_length(const PointArray& s)
{
    double len = 0.0;
    for (std::size_t k = 1; k < s.size(); ++k)
        len += std::max(std::fabs(s[k].first - s[k - 1].first),
                        std::fabs(s[k].second - s[k - 1].second));
    return len;
}

} // namespace

DpnRecord dpn_check(const MapFamily& F, const FixedPointCert& c0, const FixedPointCert& c1,
                    const std::array<PointArray, 4>& segments, int N, double epsilon)
{
    if (N < 1) throw DomainError("dpn_check requires N >= 1");
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw DomainError("dpn_check requires 0 < epsilon < 1");
    for (const PointArray& s : segments)
        if (s.empty()) throw DomainError("dpn_check: empty sample segment");

    DpnRecord rec;
    rec.epsilon = epsilon;
    rec.N = N;
    rec.B0 = centered_box(c0.box, 0.5, 1.0);
    rec.B1 = centered_box(c1.box, 0.5, 1.0);

    IBox B0e = rec.B0.inflated(-epsilon);
    IBox B1e = rec.B1.inflated(-epsilon);
    if (!boxes_disjoint(B0e, B1e))
        throw BoxesOverlap("the eps-shrunk neighborhood boxes intersect");

    rec.eta = std::max(F.expansion_bound(rec.B0.inflated(epsilon)),
                       F.expansion_bound(rec.B1.inflated(epsilon)));

    double seg_max = 0.0;
    for (const PointArray& s : segments) {
        seg_max = std::max(seg_max, segment_length(s));
        for (std::size_t k = 1; k < s.size(); ++k)
            rec.delta = std::max(rec.delta,
                                 std::max(std::fabs(s[k].first - s[k - 1].first),
                                          std::fabs(s[k].second - s[k - 1].second)));
    }
    double amp = std::pow(rec.eta, N);
    rec.crude_value = seg_max * amp;
    rec.crude_pass = rec.crude_value <= 0.5;
    if (!(rec.delta * amp < epsilon))
        throw GapTooLarge("sample gap " + std::to_string(rec.delta) + " * eta^N " +
                          std::to_string(amp) + " >= eps " + std::to_string(epsilon));

    std::size_t index = 0;
    for (int seg = 0; seg < 4; ++seg) {
        const IBox& shrunk = (seg < 2) ? B0e : B1e;
        for (const auto& [px, py] : segments[static_cast<std::size_t>(seg)]) {
            IBox z{Interval(px), Interval(py)};
            for (int j = 0; j <= N; ++j) {
                // containment of the annulus projection: reduce the iterate
                // by the integer deck shift nearest the box centre
                double k = std::round(z.x.mid() - shrunk.x.mid());
                if (!shrunk.contains(shift_x(z, -k)))
                    throw SampleEscaped(j, index,
                                        "sample " + std::to_string(index) + " leaves B" +
                                            std::to_string(seg < 2 ? 0 : 1) +
                                            "^eps at step " + std::to_string(j));
                if (j < N) z = F.eval_lift(z);
            }
            ++index;
        }
    }
    rec.sample_count = index;
    rec.pass = true;
    return rec;
}

BirkhoffRecord verify_birkhoff_related(const MapFamily& F, const FixedPointCert& c0,
                                       const FixedPointCert& c1, const IBox& U0,
                                       const IBox& U1, int N, int max_iter)
{
    if (N < 1 || max_iter < 1)
        throw DomainError("verify_birkhoff_related requires N >= 1 and max_iter >= 1");
    if (!U0.contains(c0.box) || !U1.contains(c1.box))
        throw DomainError("fixed-point boxes must be contained in their neighborhoods");

    BirkhoffRecord rec;
    rec.N = N;
    rec.U0 = U0;
    rec.U1 = U1;

    OrbitEnclosure o0 = enclose_orbit(F, U0, N, Direction::Forward);
    OrbitEnclosure o1 = enclose_orbit(F, U1, N, Direction::Forward);
    for (const IBox& a : o0.boxes)
        for (const IBox& b : o1.boxes)
            if (!boxes_disjoint(a, b))
                throw DpnFailure("forward images of U0 and U1 are not provably disjoint");
    // inessential unions: the projected x-shadows must leave some vertical
    // circle uncovered; the complement of that circle is an open disk
    // containing the whole union
    for (const OrbitEnclosure* o : {&o0, &o1}) {
        std::vector<std::pair<double, double>> arcs;
        for (const IBox& b : o->boxes) {
            double w = b.x.width();
            if (!(w < 1.0))
                throw DpnFailure("a forward image has x-extent >= 1 (not inessential)");
            double m = std::fmod(b.x.lo(), 1.0);
            if (m < 0.0) m += 1.0;
            if (m + w <= 1.0) {
                arcs.emplace_back(m, m + w);
            } else {
                arcs.emplace_back(m, 1.0);
                arcs.emplace_back(0.0, m + w - 1.0);
            }
        }
        std::sort(arcs.begin(), arcs.end());
        double covered = 0.0;
        bool gap = false;
        for (const auto& [lo, hi] : arcs) {
            if (lo > covered) { gap = true; break; }
            covered = std::max(covered, hi);
        }
        if (!gap && covered >= 1.0)
            throw DpnFailure("union of forward images covers every vertical circle "
                             "(not provably inessential)");
    }
    rec.dpn_pass = true;

    // transit search: double-precision shooting from a grid of seeds, then
    // rigorous thin-box validation of the winning candidate
    auto find_transit = [&](const IBox& src, const IBox& dst, int& steps, IBox& final_box) {
        const int G = 16;
        std::vector<std::pair<double, double>> seeds;
        seeds.emplace_back(src.x.mid(), src.y.mid());
        for (int i = 0; i < G; ++i)
            for (int j = 0; j < G; ++j)
                seeds.emplace_back(src.x.lo() + (i + 0.5) / G * src.x.width(),
                                   src.y.lo() + (j + 0.5) / G * src.y.width());
        for (int n = 1; n <= max_iter; ++n) {
            for (const auto& [seed_x, seed_y] : seeds) {
                {
                    double x = seed_x, y = seed_y;
                    double sx = x, sy = y;
                    bool ok = true;
                    for (int k = 0; k < n; ++k) {
                        double X, Y;
                        F.eval_pt(x, y, X, Y);
                        x = X;
                        y = Y;
                        if (!std::isfinite(x) || !std::isfinite(y)) { ok = false; break; }
                    }
                    // candidate must land well inside before paying for rigor
                    double margin = std::min(1e-3, 0.25 * std::min(dst.x.width(), dst.y.width()));
                    if (!ok || !dst.inflated(-margin).contains(x - std::floor(x - dst.x.lo()), y))
                        continue;
                    double shift = std::floor(x - dst.x.lo());
                    OrbitEnclosure orb = enclose_orbit(
                        F, IBox(Interval(sx), Interval(sy)), n, Direction::Forward);
                    IBox last = shift_x(orb.boxes.back(), -shift);
                    if (last.strict_subset_of(dst)) {
                        steps = n;
                        final_box = last;
                        return true;
                    }
                }
            }
        }
        return false;
    };

    if (!find_transit(U0, U1, rec.transit01_steps, rec.transit01_box))
        throw NoTransitFound("no validated transit orbit U0 -> U1 within " +
                             std::to_string(max_iter) + " iterates");
    if (!find_transit(U1, U0, rec.transit10_steps, rec.transit10_box))
        throw NoTransitFound("no validated transit orbit U1 -> U0 within " +
                             std::to_string(max_iter) + " iterates");
    return rec;
}

} // namespace horseshoe
