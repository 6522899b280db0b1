#include "horseshoe/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace horseshoe {

RPoint operator+(const RPoint& a, const RPoint& b) { return {a.x + b.x, a.y + b.y}; }
RPoint operator-(const RPoint& a, const RPoint& b) { return {a.x - b.x, a.y - b.y}; }

bool lex_less(const RPoint& a, const RPoint& b)
{
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

int orient(const RPoint& a, const RPoint& b, const RPoint& c)
{
    Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (d > 0) return 1;
    if (d < 0) return -1;
    return 0;
}

bool on_segment(const RSegment& s, const RPoint& p)
{
    if (orient(s.p, s.q, p) != 0) return false;
    if (p.x < std::min(s.p.x, s.q.x) || p.x > std::max(s.p.x, s.q.x)) return false;
    if (p.y < std::min(s.p.y, s.q.y) || p.y > std::max(s.p.y, s.q.y)) return false;
    return true;
}

SegCross classify_cross(const RSegment& s, const RSegment& t)
{
    int o1 = orient(s.p, s.q, t.p);
    int o2 = orient(s.p, s.q, t.q);
    int o3 = orient(t.p, t.q, s.p);
    int o4 = orient(t.p, t.q, s.q);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
        return SegCross::Proper;
    // any collinearity or endpoint contact within range is degenerate
    bool touch = false;
    if (o1 == 0 && on_segment(s, t.p)) touch = true;
    if (o2 == 0 && on_segment(s, t.q)) touch = true;
    if (o3 == 0 && on_segment(t, s.p)) touch = true;
    if (o4 == 0 && on_segment(t, s.q)) touch = true;
    return touch ? SegCross::Degenerate : SegCross::None;
}

RPoint cross_point(const RSegment& s, const RSegment& t)
{
    RPoint r = s.q - s.p, d = t.q - t.p;
    Rational den = r.x * d.y - r.y * d.x;
    Rational u = ((t.p.x - s.p.x) * d.y - (t.p.y - s.p.y) * d.x) / den;
    return {s.p.x + u * r.x, s.p.y + u * r.y};
}

std::size_t Polyline::segment_count() const
{
    if (vertices.size() < 2) return 0;
    return closed ? vertices.size() : vertices.size() - 1;
}

RSegment Polyline::segment(std::size_t i) const
{
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
}

Rational Polyline::min_x() const
{
    Rational m = vertices.at(0).x;
    for (const RPoint& p : vertices) m = std::min(m, p.x);
    return m;
}

Rational Polyline::max_x() const
{
    Rational m = vertices.at(0).x;
    for (const RPoint& p : vertices) m = std::max(m, p.x);
    return m;
}

Polyline Polyline::translated(const Rational& dx, const Rational& dy) const
{
    Polyline out = *this;
    for (RPoint& p : out.vertices) {
        p.x += dx;
        p.y += dy;
    }
    return out;
}

Polyline Polyline::reversed() const
{
    Polyline out = *this;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

Polyline make_polyline(std::initializer_list<std::pair<double, double>> pts, bool closed)
{
    Polyline p;
    p.closed = closed;
    for (const auto& [x, y] : pts) p.vertices.push_back({Rational(x), Rational(y)});
    return p;
}

bool is_simple(const Polyline& p)
{
    std::size_t n = p.segment_count();
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (p.vertices[i] == p.vertices[i + 1]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (p.closed && i == 0 && j == n - 1);
            SegCross c = classify_cross(p.segment(i), p.segment(j));
            if (c == SegCross::Proper) return false;
            if (c == SegCross::Degenerate) {
                if (!adjacent) return false;
                // adjacent segments legitimately share one vertex; any
                // further contact (fold-back overlap) is non-simple
                RSegment s = p.segment(i), t = p.segment(j);
                RPoint shared = (j == i + 1) ? s.q : s.p;
                int extra = 0;
                for (const RPoint& e : {t.p, t.q})
                    if (e != shared && on_segment(s, e)) ++extra;
                for (const RPoint& e : {s.p, s.q})
                    if (e != shared && on_segment(t, e)) ++extra;
                if (extra > 0) return false;
            }
        }
    }
    return true;
}

namespace {

// shared declared endpoints (arc tips coinciding exactly) are the one
// allowed non-transverse contact: they are stable under the lemmas'
// hypotheses (arcs with common endpoints)
bool is_shared_tip(const Polyline& a, const Polyline& b, const RPoint& p)
{
    auto is_tip = [](const Polyline& poly, const RPoint& q) {
        if (poly.closed || poly.vertices.empty()) return false;
        if (poly.vertices.front() == q) return true;
        if (poly.vertices.back() == q) return true;
        return false;
    };
    return is_tip(a, p) && is_tip(b, p);
}

} // namespace

bool polylines_meet(const Polyline& a, const Polyline& b)
{
    bool meet = false;
    for (std::size_t i = 0; i < a.segment_count(); ++i) {
        for (std::size_t j = 0; j < b.segment_count(); ++j) {
            RSegment s = a.segment(i), t = b.segment(j);
            SegCross c = classify_cross(s, t);
            if (c == SegCross::Proper) meet = true;
            if (c == SegCross::Degenerate) {
                bool ok = false;
                for (const RPoint& p : {t.p, t.q})
                    if (on_segment(s, p) && is_shared_tip(a, b, p)) ok = true;
                for (const RPoint& p : {s.p, s.q})
                    if (on_segment(t, p) && is_shared_tip(a, b, p)) ok = true;
                if (!ok)
                    throw DegeneratePosition("polylines touch non-transversally");
                meet = true;
            }
        }
    }
    return meet;
}

std::vector<RPoint> crossing_points(const Polyline& a, const Polyline& b)
{
    std::vector<RPoint> out;
    for (std::size_t i = 0; i < a.segment_count(); ++i) {
        for (std::size_t j = 0; j < b.segment_count(); ++j) {
            RSegment s = a.segment(i), t = b.segment(j);
            SegCross c = classify_cross(s, t);
            if (c == SegCross::Degenerate)
                throw DegeneratePosition("non-transverse contact in crossing scan");
            if (c == SegCross::Proper) out.push_back(cross_point(s, t));
        }
    }
    return out;
}

std::string polyline_to_string(const Polyline& p)
{
    std::ostringstream os;
    os << (p.closed ? "closed[" : "open[");
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) os << ",";
        os << "[" << p.vertices[i].x << "," << p.vertices[i].y << "]";
    }
    os << "]";
    return os.str();
}

Polyline polyline_from_string(const std::string& s)
{
    Polyline p;
    std::size_t pos = s.find('[');
    if (pos == std::string::npos) throw ParseError("missing '['", 0);
    p.closed = s.rfind("closed", 0) == 0;
    std::size_t i = pos + 1;
    while (i < s.size() && s[i] != ']') {
        if (s[i] == ',') {
            ++i;
            continue;
        }
        if (s[i] != '[') throw ParseError("expected '['", i);
        std::size_t mid = s.find(',', i);
        std::size_t end = s.find(']', i);
        if (mid == std::string::npos || end == std::string::npos || mid > end)
            throw ParseError("malformed point", i);
        RPoint pt;
        pt.x = Rational(s.substr(i + 1, mid - i - 1));
        pt.y = Rational(s.substr(mid + 1, end - mid - 1));
        p.vertices.push_back(pt);
        i = end + 1;
    }
    return p;
}

} // namespace horseshoe
