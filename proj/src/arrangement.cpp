#include "horseshoe/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace horseshoe {

namespace {

constexpr int kLabelFree = -1; // scaffold: crossable at no cost
constexpr int kLabelWall = -2; // box edges and gamma lifts: never crossable
constexpr int kMaxLifts = 16;

struct LSeg {
    RPoint p, q;
    int label; // >= 0: A-lift slot, else kLabelFree / kLabelWall
};

bool collinear_overlap(const RSegment& s, const RSegment& t)
{
    if (orient(s.p, s.q, t.p) != 0 || orient(s.p, s.q, t.q) != 0) return false;
    int interior = 0;
    for (const RPoint& e : {t.p, t.q})
        if (on_segment(s, e) && e != s.p && e != s.q) ++interior;
    for (const RPoint& e : {s.p, s.q})
        if (on_segment(t, e) && e != t.p && e != t.q) ++interior;
    if (interior > 0) return true;
    // identical or sharing both endpoints
    bool same = (s.p == t.p && s.q == t.q) || (s.p == t.q && s.q == t.p);
    return same;
}

struct PointLess {
    bool operator()(const RPoint& a, const RPoint& b) const { return lex_less(a, b); }
};

// Exact planar arrangement with face traversal. Input segments may share
// endpoints and have T-junctions; collinear overlaps are rejected.
struct Arrangement {
    std::vector<RPoint> verts;
    std::map<RPoint, int, PointLess> vert_id;
    // split edges: (u, v, label)
    struct Edge {
        int u, v, label;
    };
    std::vector<Edge> edges;
    // half-edge h = 2*e (u->v) or 2*e+1 (v->u)
    std::vector<int> face_of;  // per half-edge
    int n_faces = 0;

    int vid(const RPoint& p)
    {
        auto it = vert_id.find(p);
        if (it != vert_id.end()) return it->second;
        int id = static_cast<int>(verts.size());
        verts.push_back(p);
        vert_id.emplace(p, id);
        return id;
    }

    void build(const std::vector<LSeg>& segs)
    {
        // gather split points per segment
        std::vector<std::vector<RPoint>> cuts(segs.size());
        for (std::size_t i = 0; i < segs.size(); ++i) {
            cuts[i].push_back(segs[i].p);
            cuts[i].push_back(segs[i].q);
        }
        for (std::size_t i = 0; i < segs.size(); ++i) {
            RSegment s{segs[i].p, segs[i].q};
            for (std::size_t j = i + 1; j < segs.size(); ++j) {
                RSegment t{segs[j].p, segs[j].q};
                if (collinear_overlap(s, t))
                    throw DegeneratePosition("collinear overlap in arrangement");
                SegCross c = classify_cross(s, t);
                if (c == SegCross::Proper) {
                    RPoint p = cross_point(s, t);
                    cuts[i].push_back(p);
                    cuts[j].push_back(p);
                } else {
                    // T-junctions and shared endpoints become vertices
                    for (const RPoint& e : {t.p, t.q})
                        if (on_segment(s, e)) cuts[i].push_back(e);
                    for (const RPoint& e : {s.p, s.q})
                        if (on_segment(t, e)) cuts[j].push_back(e);
                }
            }
        }
        std::map<std::pair<int, int>, int> seen; // undirected edge -> label
        for (std::size_t i = 0; i < segs.size(); ++i) {
            auto& c = cuts[i];
            RPoint o = segs[i].p;
            std::sort(c.begin(), c.end(), [&](const RPoint& a, const RPoint& b) {
                Rational da = (a.x - o.x) * (a.x - o.x) + (a.y - o.y) * (a.y - o.y);
                Rational db = (b.x - o.x) * (b.x - o.x) + (b.y - o.y) * (b.y - o.y);
                return da < db;
            });
            c.erase(std::unique(c.begin(), c.end(),
                                [](const RPoint& a, const RPoint& b) { return a == b; }),
                    c.end());
            for (std::size_t k = 0; k + 1 < c.size(); ++k) {
                int u = vid(c[k]), v = vid(c[k + 1]);
                auto key = std::minmax(u, v);
                auto it = seen.find({key.first, key.second});
                if (it != seen.end()) {
                    // duplicate geometry may appear when lifts coincide
                    // with scaffolds; keep the stronger label
                    Edge& e = edges[it->second];
                    if (e.label == kLabelFree) e.label = segs[i].label;
                    continue;
                }
                seen[{key.first, key.second}] = static_cast<int>(edges.size());
                edges.push_back({u, v, segs[i].label});
            }
        }
        trace_faces();
    }

    int head(int h) const { return (h & 1) ? edges[h >> 1].u : edges[h >> 1].v; }
    int tail(int h) const { return (h & 1) ? edges[h >> 1].v : edges[h >> 1].u; }

    void trace_faces()
    {
        int H = static_cast<int>(edges.size()) * 2;
        std::vector<std::vector<int>> out(verts.size()); // outgoing half-edges
        for (int h = 0; h < H; ++h) out[tail(h)].push_back(h);

        auto dir = [&](int h) {
            return verts[head(h)] - verts[tail(h)];
        };
        auto half_plane = [](const RPoint& d) {
            // 0 for angle in [0, pi), 1 for [pi, 2pi)
            if (d.y > 0) return 0;
            if (d.y < 0) return 1;
            return d.x > 0 ? 0 : 1;
        };
        for (auto& lst : out) {
            std::sort(lst.begin(), lst.end(), [&](int a, int b) {
                RPoint da = dir(a), db = dir(b);
                int ha = half_plane(da), hb = half_plane(db);
                if (ha != hb) return ha < hb;
                Rational cr = da.x * db.y - da.y * db.x;
                if (cr != 0) return cr > 0; // ccw order
                return a < b; // parallel duplicates cannot occur (no overlaps)
            });
        }
        std::vector<std::vector<int>> pos(verts.size());
        for (std::size_t v = 0; v < out.size(); ++v) {
            pos[v].resize(edges.size() * 2, -1);
            for (std::size_t k = 0; k < out[v].size(); ++k) pos[v][out[v][k]] = static_cast<int>(k);
        }
        auto next_he = [&](int h) {
            int v = head(h);
            int tw = h ^ 1;
            const auto& lst = out[v];
            int idx = pos[v][tw];
            int n = static_cast<int>(lst.size());
            return lst[(idx - 1 + n) % n]; // clockwise neighbor of the twin
        };

        face_of.assign(H, -1);
        n_faces = 0;
        for (int h = 0; h < H; ++h) {
            if (face_of[h] != -1) continue;
            int cur = h;
            do {
                face_of[cur] = n_faces;
                cur = next_he(cur);
            } while (cur != h);
            ++n_faces;
        }
    }
};

struct SepProblem {
    Arrangement arr;
    int n_labels = 0;
    std::vector<std::vector<std::pair<int, int>>> adj; // face -> (face, label)
    std::vector<int> start_faces;
    std::vector<char> top_face, bottom_face;

    bool search(const std::vector<int>& starts, unsigned mask, bool to_top) const
    {
        std::vector<char> vis(adj.size(), 0);
        std::deque<int> q;
        for (int f : starts)
            if (!vis[f]) {
                vis[f] = 1;
                q.push_back(f);
            }
        const std::vector<char>& target = to_top ? top_face : bottom_face;
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            if (target[f]) return true;
            for (auto [g, lab] : adj[f]) {
                if (vis[g]) continue;
                if (lab == kLabelWall) continue;
                if (lab >= 0 && !((mask >> lab) & 1u)) continue;
                vis[g] = 1;
                q.push_back(g);
            }
        }
        return false;
    }

    bool reachable(unsigned mask, bool to_top) const
    {
        return search(start_faces, mask, to_top);
    }

    // whether the arcs actually separate the two ends of the strip
    bool ends_separated() const
    {
        std::vector<int> bottoms;
        for (std::size_t f = 0; f < adj.size(); ++f)
            if (bottom_face[f]) bottoms.push_back(static_cast<int>(f));
        return !search(bottoms, 0u, true);
    }

    // fewest label-edge crossings path (0-1 BFS); distinct labels along
    // one such path give an upper bound for the subset search
    int greedy_bound(bool to_top) const
    {
        int n = static_cast<int>(adj.size());
        std::vector<int> dist(n, -1);
        std::vector<unsigned> labs(n, 0);
        std::deque<int> q;
        for (int f : start_faces)
            if (dist[f] < 0) {
                dist[f] = 0;
                q.push_back(f);
            }
        const std::vector<char>& target = to_top ? top_face : bottom_face;
        int best = -1;
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            if (target[f]) {
                int cnt = 0;
                for (unsigned m = labs[f]; m; m &= m - 1) ++cnt;
                if (best < 0 || cnt < best) best = cnt;
                continue;
            }
            for (auto [g, lab] : adj[f]) {
                if (lab == kLabelWall) continue;
                int w = lab >= 0 ? 1 : 0;
                int nd = dist[f] + w;
                if (dist[g] < 0 || nd < dist[g]) {
                    dist[g] = nd;
                    labs[g] = labs[f] | (lab >= 0 ? (1u << lab) : 0u);
                    if (w)
                        q.push_back(g);
                    else
                        q.push_front(g);
                }
            }
        }
        return best; // -1 means unreachable even crossing everything
    }
};

// choose a wall / scaffold abscissa close to `want` that avoids every
// existing vertex x-coordinate
Rational generic_x(const Rational& want, const std::vector<LSeg>& segs)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rational c = want + Rational(attempt, 97);
        bool hit = false;
        for (const LSeg& s : segs)
            if (s.p.x == c || s.q.x == c) {
                hit = true;
                break;
            }
        if (!hit) return c;
    }
    throw DegeneratePosition("could not place a generic vertical");
}

SepProblem build_problem(const RPoint& x, const Polyline& A, const Polyline& gamma)
{
    if (A.vertices.size() < 2 || A.closed)
        throw DomainError("A must be an open arc");
    if (!(x == A.vertices.front()))
        throw DomainError("x must be the initial point of A");
    for (const RPoint& p : gamma.vertices)
        if (p == x) throw DegeneratePosition("gamma passes through x");
    // endpoints of gamma lie on A in the annulus, i.e. on some lift here
    bool e0 = false, e1 = false;
    long espan = r_ceil(gamma.max_x() - gamma.min_x()) +
                 r_ceil(A.max_x() - A.min_x()) + 2;
    for (long j = -espan; j <= espan; ++j) {
        Polyline Aj = A.translated(Rational(j));
        for (std::size_t i = 0; i < Aj.segment_count(); ++i) {
            if (on_segment(Aj.segment(i), gamma.vertices.front())) e0 = true;
            if (on_segment(Aj.segment(i), gamma.vertices.back())) e1 = true;
        }
    }
    if (!e0 || !e1) throw DomainError("gamma endpoints must lie on a lift of A");

    // strip bounds: one extra period past the configuration hull
    Rational hxlo = std::min(A.min_x(), gamma.min_x());
    Rational hxhi = std::max(A.max_x(), gamma.max_x());
    Rational hylo = A.vertices[0].y, hyhi = hylo;
    for (const Polyline* p : {&A, &gamma})
        for (const RPoint& v : p->vertices) {
            hylo = std::min(hylo, v.y);
            hyhi = std::max(hyhi, v.y);
        }

    long jlo = r_ceil(hxlo - Rational(5, 4) - A.max_x());
    long jhi = r_floor(hxhi + Rational(5, 4) - A.min_x());
    int K = static_cast<int>(jhi - jlo + 1);
    if (K > kMaxLifts) throw TooManyLifts("strip needs " + std::to_string(K) + " lifts");
    if (K < 1) throw DomainError("degenerate strip");

    std::vector<LSeg> segs;
    auto add_polyline = [&](const Polyline& p, int label) {
        for (std::size_t i = 0; i < p.segment_count(); ++i) {
            RSegment s = p.segment(i);
            segs.push_back({s.p, s.q, label});
        }
    };
    for (long j = jlo; j <= jhi; ++j) {
        int slot = static_cast<int>(j - jlo);
        add_polyline(A.translated(Rational(j)), slot);
    }
    // gamma needs its own window: every lift meeting the strip must be
    // present or the barrier gets spurious gaps near the walls
    long gjlo = r_floor(hxlo - Rational(5, 4) - gamma.max_x()) - 1;
    long gjhi = r_ceil(hxhi + Rational(9, 4) - gamma.min_x()) + 1;
    for (long j = gjlo; j <= gjhi; ++j)
        add_polyline(gamma.translated(Rational(j)), kLabelWall);

    Rational Xlo = generic_x(hxlo - Rational(5, 4), segs);
    Rational Xhi = generic_x(hxhi + Rational(5, 4), segs);
    Rational Ylo = hylo - 1, Yhi = hyhi + 1;

    // scaffold verticals tie every lift component to the box so each
    // arrangement face has a single boundary cycle
    std::vector<LSeg> scaffolds;
    for (long j = jlo; j <= jhi; ++j) {
        Rational c = generic_x((A.min_x() + A.max_x()) / 2 + j, segs);
        if (c > Xlo && c < Xhi) scaffolds.push_back({{c, Ylo}, {c, Yhi}, kLabelFree});
    }
    for (const LSeg& s : scaffolds) segs.push_back(s);

    segs.push_back({{Xlo, Ylo}, {Xhi, Ylo}, kLabelWall}); // bottom
    segs.push_back({{Xhi, Ylo}, {Xhi, Yhi}, kLabelWall}); // right
    segs.push_back({{Xhi, Yhi}, {Xlo, Yhi}, kLabelWall}); // top
    segs.push_back({{Xlo, Yhi}, {Xlo, Ylo}, kLabelWall}); // left

    SepProblem prob;
    prob.n_labels = K;
    prob.arr.build(segs);
    Arrangement& arr = prob.arr;

    prob.adj.assign(arr.n_faces, {});
    for (std::size_t e = 0; e < arr.edges.size(); ++e) {
        int f1 = arr.face_of[2 * e], f2 = arr.face_of[2 * e + 1];
        if (f1 == f2) continue; // bridge: never needs to be crossed
        int lab = arr.edges[e].label;
        prob.adj[f1].push_back({f2, lab});
        prob.adj[f2].push_back({f1, lab});
    }

    prob.top_face.assign(arr.n_faces, 0);
    prob.bottom_face.assign(arr.n_faces, 0);
    for (std::size_t e = 0; e < arr.edges.size(); ++e) {
        const RPoint& u = arr.verts[arr.edges[e].u];
        const RPoint& v = arr.verts[arr.edges[e].v];
        bool top = u.y == Yhi && v.y == Yhi;
        bool bottom = u.y == Ylo && v.y == Ylo;
        if (!top && !bottom) continue;
        // only the inner side of the box wall: the face left of the
        // rightward half-edge for the bottom, leftward for the top
        int h_uv = static_cast<int>(2 * e); // runs u -> v
        int h_vu = h_uv + 1;
        bool uv_rightward = u.x < v.x;
        if (bottom) prob.bottom_face[arr.face_of[uv_rightward ? h_uv : h_vu]] = 1;
        if (top) prob.top_face[arr.face_of[uv_rightward ? h_vu : h_uv]] = 1;
    }

    auto it = arr.vert_id.find(x);
    if (it == arr.vert_id.end()) throw DegeneratePosition("x is not an arrangement vertex");
    int xv = it->second;
    std::vector<char> is_start(arr.n_faces, 0);
    for (std::size_t e = 0; e < arr.edges.size(); ++e) {
        if (arr.edges[e].u != xv && arr.edges[e].v != xv) continue;
        is_start[arr.face_of[2 * e]] = 1;
        is_start[arr.face_of[2 * e + 1]] = 1;
    }
    for (int f = 0; f < arr.n_faces; ++f)
        if (is_start[f]) prob.start_faces.push_back(f);
    if (prob.start_faces.empty()) throw DegeneratePosition("x has no incident face");
    return prob;
}

int subset_minimum(const SepProblem& prob, bool to_top, int cap)
{
    int K = prob.n_labels;
    for (int s = 0; s <= std::min(cap, K); ++s) {
        // enumerate size-s subsets of [0, K)
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            unsigned mask = 0;
            for (int i : idx) mask |= 1u << i;
            if (prob.reachable(mask, to_top)) return s;
            if (s == 0) break;
            int i = s - 1;
            while (i >= 0 && idx[i] == K - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int k = i + 1; k < s; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    throw NotEssential("no crossing set reaches the target side");
}

} // namespace

SepReport sep_detail(const RPoint& x, const Polyline& A, const Polyline& gamma,
                     SepSide side)
{
    SepProblem prob = build_problem(x, A, gamma);
    bool to_top = side == SepSide::Upper;
    if (!prob.ends_separated())
        throw NotEssential("the union of the arcs does not separate the ends");
    int bound = prob.greedy_bound(to_top);
    if (bound < 0) throw NotEssential("target side unreachable in the strip");
    SepReport r;
    r.greedy_bound = bound;
    r.lifts = prob.n_labels;
    r.faces = static_cast<int>(prob.adj.size());
    r.value = subset_minimum(prob, to_top, bound);
    return r;
}

int sep(const RPoint& x, const Polyline& A, const Polyline& gamma, SepSide side)
{
    return sep_detail(x, A, gamma, side).value;
}

int sep_oracle(const RPoint& x, const Polyline& A, const Polyline& gamma, SepSide side)
{
    SepProblem prob = build_problem(x, A, gamma);
    bool to_top = side == SepSide::Upper;
    if (!prob.ends_separated())
        throw NotEssential("the union of the arcs does not separate the ends");
    return subset_minimum(prob, to_top, prob.n_labels);
}

} // namespace horseshoe
