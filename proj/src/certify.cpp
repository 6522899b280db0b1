#include "horseshoe/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <future>
#include <sstream>
#include <thread>

namespace horseshoe {

namespace {

std::string now_iso()
{
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int ceil_div_34(int rho) { return (34 + rho - 1) / rho; }

std::string fail_verdict(const std::string& stage, const std::exception& e)
{
    return "failed:" + stage + ": " + e.what();
}

struct ShotCandidate {
    int steps;
    double sx, sy;
};

// straight polyline from (fx,fy) to (tx,ty) with gaps <= delta_max; the
// endpoints are hit exactly so stored witnesses recheck bit-for-bit
PointArray straight_segment(double fx, double fy, double tx, double ty, double delta_max)
{
    double len = std::max(std::fabs(tx - fx), std::fabs(ty - fy));
    int m = std::max(2, static_cast<int>(std::ceil(len / delta_max)) + 1);
    PointArray seg;
    seg.reserve(static_cast<std::size_t>(m));
    seg.emplace_back(fx, fy);
    for (int j = 1; j < m - 1; ++j) {
        double t = static_cast<double>(j) / (m - 1);
        seg.emplace_back(fx + t * (tx - fx), fy + t * (ty - fy));
    }
    seg.emplace_back(tx, ty);
    return seg;
}

} // namespace

int max_backward_steps(const DissipativeCertificate& c)
{
    if (!c.has_witnesses) return -1;
    int m = -1;
    for (const WitnessRecord& w : c.witnesses) m = std::max(m, w.crossing_step);
    return m;
}

DissipativeCertificate certify_dissipative(const DissipativeConfig& cfg)
{
    if (!(cfg.b_level > 1.0)) throw DomainError("b_level must exceed 1");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw DomainError("epsilon must be in (0,1)");
    if (cfg.free_curve_slices < 1 || cfg.ring_seeds < 4 || cfg.max_backward < 1)
        throw DomainError("invalid search budgets");

    MapFamily F = MapFamily::dissipative(cfg.a, cfg.b); // throws on b outside (0,1)
    if (cfg.power > 1) F = F.powered(cfg.power);

    DissipativeCertificate cert;
    cert.a = cfg.a;
    cert.b = cfg.b;
    cert.power = cfg.power;
    cert.b_level = cfg.b_level;
    cert.timestamp = now_iso();

    std::string stage = "fixed_points";
    try {
        // fixed-point pair with opposite rotations: heights y = +-k with
        // k*a an integer rotation; prefer the larger height while the
        // anchor sin(2*pi*x) = (1-b)*k stays away from 1
        double am = cfg.a.mid(), bm = cfg.b.mid();
        int p = 0;
        for (int k : {2, 1}) {
            double pk = k * am;
            // height 2 only while the anchor stays comfortably away from
            // the sine extremum; height 1 tolerates more
            double cap = k == 2 ? 0.75 : 0.97;
            if (std::fabs(pk - std::round(pk)) < 1e-9 && std::round(pk) >= 1.0 &&
                (1.0 - bm) * k <= cap) {
                p = static_cast<int>(std::round(pk));
                break;
            }
        }
        if (p < 1) {
            double cap = 0.75 * am / (1.0 - bm);
            if (cap >= 1.0) p = static_cast<int>(std::floor(cap));
        }
        if (p < 1)
            throw NoFixedPointPair("no admissible rotation pair for a=" +
                                   std::to_string(am) + ", b=" + std::to_string(bm));
        double y0 = p / am;
        double x0 = std::asin((1.0 - bm) * p / am) / (2.0 * M_PI);
        cert.c1 = certify_fixed_point(
            F, IBox(Interval(x0 - 1e-3, x0 + 1e-3), Interval(y0 - 1e-3, y0 + 1e-3)), p);
        cert.c0 = certify_fixed_point(
            F, IBox(Interval(-x0 - 1e-3, -x0 + 1e-3), Interval(-y0 - 1e-3, -y0 + 1e-3)), -p);
        cert.rho = cert.c1.rotation - cert.c0.rotation;
        cert.N = cfg.N_override.value_or(ceil_div_34(cert.rho));
        cert.has_fixed_points = true;

        stage = "free_curves";
        for (int i = 0; i < 2; ++i) {
            double level = i == 0 ? cfg.b_level : -cfg.b_level;
            int slices = cfg.free_curve_slices;
            for (;;) {
                Interval hull(0.0);
                bool first = true;
                for (int s = 0; s < slices; ++s) {
                    Interval X(static_cast<double>(s) / slices,
                               static_cast<double>(s + 1) / slices);
                    Interval Y = F.eval_lift(IBox(X, Interval(level))).y;
                    hull = first ? Y : Interval::hull(hull, Y);
                    first = false;
                }
                if (hull.lo() > -cfg.b_level && hull.hi() < cfg.b_level) {
                    cert.free_curves[static_cast<std::size_t>(i)] =
                        FreeCurveRecord{level, slices, hull};
                    break;
                }
                if (slices >= (1 << 14))
                    throw FreeCurveFailure(
                        "image of the circle y=" + std::to_string(level) +
                        " not strictly inside the band: enclosure [" +
                        std::to_string(hull.lo()) + ", " + std::to_string(hull.hi()) + "]");
                slices *= 2;
            }
        }
        cert.has_free_curves = true;

        stage = "witnesses";
        double eps = cfg.epsilon;
        IBox B0(Interval(cert.c0.box.x.mid() - 0.5, cert.c0.box.x.mid() + 0.5),
                Interval(cert.c0.box.y.mid() - 1.0, cert.c0.box.y.mid() + 1.0));
        IBox B1(Interval(cert.c1.box.x.mid() - 0.5, cert.c1.box.x.mid() + 0.5),
                Interval(cert.c1.box.y.mid() - 1.0, cert.c1.box.y.mid() + 1.0));
        double eta = std::max(F.expansion_bound(B0.inflated(eps)),
                              F.expansion_bound(B1.inflated(eps)));
        double r = cert.N <= 3 ? 1e-4 : 1e-8; // ring radius calibrated to eta^N
        double delta_max = 0.8 * eps / std::pow(eta, cert.N);

        const FixedPointCert* fps[2] = {&cert.c0, &cert.c1};
        for (int i = 0; i < 2; ++i) {
            double fx = fps[i]->box.x.mid(), fy = fps[i]->box.y.mid();
            for (int j = 0; j < 2; ++j) {
                Side side = j == 0 ? Side::Above : Side::Below;
                std::vector<ShotCandidate> cands;
                for (int sidx = 0; sidx < cfg.ring_seeds; ++sidx) {
                    double th = 2.0 * M_PI * sidx / cfg.ring_seeds;
                    double sx = fx + r * std::cos(th), sy = fy + r * std::sin(th);
                    double x = sx, y = sy;
                    for (int k = 1; k <= cfg.max_backward; ++k) {
                        double px, py;
                        F.eval_pt_inverse(x, y, px, py);
                        x = px;
                        y = py;
                        if (!std::isfinite(x) || !std::isfinite(y)) break;
                        bool hit = side == Side::Above ? y > cfg.b_level + 0.05
                                                       : y < -cfg.b_level - 0.05;
                        if (hit) {
                            cands.push_back({k, sx, sy});
                            break;
                        }
                    }
                }
                std::sort(cands.begin(), cands.end(),
                          [](const ShotCandidate& u, const ShotCandidate& v) {
                              return u.steps < v.steps;
                          });
                if (cands.empty())
                    throw NoWitnessFound("no backward crossing found from the witness ring"
                                         " around fixed point " + std::to_string(i));
                bool done = false;
                for (std::size_t ci = 0; ci < cands.size() && ci < 8 && !done; ++ci) {
                    for (int kk = cands[ci].steps;
                         kk <= std::min(cands[ci].steps + 2, cfg.max_backward) && !done; ++kk) {
                        OrbitEnclosure orb;
                        try {
                            orb = enclose_orbit(
                                F, IBox(Interval(cands[ci].sx), Interval(cands[ci].sy)), kk,
                                Direction::Backward);
                        } catch (const BlowupError&) {
                            break;
                        }
                        auto cs = crossing_check(orb, cfg.b_level, side);
                        if (cs) {
                            WitnessRecord& wrec = cert.witnesses[static_cast<std::size_t>(
                                2 * i + j)];
                            wrec.px = cands[ci].sx;
                            wrec.py = cands[ci].sy;
                            wrec.orbit = std::move(orb);
                            wrec.crossing_step = *cs;
                            wrec.side = side;
                            cert.segments[static_cast<std::size_t>(2 * i + j)] =
                                straight_segment(fx, fy, wrec.px, wrec.py, delta_max);
                            done = true;
                        }
                    }
                }
                if (!done)
                    throw NoWitnessFound("backward crossing candidates failed rigorous"
                                         " validation around fixed point " + std::to_string(i));
            }
        }
        cert.has_witnesses = true;

        stage = "dpn";
        cert.dpn = dpn_check(F, cert.c0, cert.c1, cert.segments, cert.N, cfg.epsilon);
        cert.has_dpn = true;

        cert.verdict = "certified";
    } catch (const Error& e) {
        cert.verdict = fail_verdict(stage, e);
    }
    return cert;
}

HamiltonianCertificate certify_hamiltonian(const HamiltonianConfig& cfg)
{
    if (!(cfg.L1 > 0.0) || !(cfg.L2 > cfg.L1)) throw DomainError("need 0 < L1 < L2");
    if (cfg.seed_grid < 1 || cfg.max_iter < 1 || cfg.mean_slices < 1)
        throw DomainError("invalid search budgets");

    ExprPtr h = parse_expr(cfg.h);
    ExprPtr w = parse_expr(cfg.w);
    MapFamily F = MapFamily::generalized(h, w, cfg.mean_slices); // throws on range failure
    if (cfg.power > 1) F = F.powered(cfg.power);

    HamiltonianCertificate cert;
    cert.h_str = cfg.h;
    cert.w_str = cfg.w;
    cert.power = cfg.power;
    cert.mean_slices = cfg.mean_slices;
    cert.mean = F.mean();
    cert.L1 = cfg.L1;
    cert.L2 = cfg.L2;
    cert.rho = 2; // pipeline targets the rotation pair -1, +1
    cert.c_coeff = 2;
    cert.assumption =
        "nonwandering hypothesis discharged by the dichotomy: either every point of the "
        "map is nonwandering, or the map already has a rotational horseshoe; in both "
        "cases the certified crossing orbit yields positive topological entropy";
    cert.timestamp = now_iso();

    std::string stage = "inequality";
    try {
        cert.NL2_bound = F.vertical_displacement_bound(cfg.L2);
        cert.ineq_lhs = Interval(cfg.L2);
        cert.ineq_rhs = Interval(cfg.L1) +
                        Interval(static_cast<double>(cert.c_coeff)) * Interval(cert.NL2_bound);
        if (!(cert.ineq_lhs.lo() >= cert.ineq_rhs.hi()))
            throw InequalityFails("L2 = " + std::to_string(cfg.L2) + " < L1 + c*NL2 <= " +
                                  std::to_string(cert.ineq_rhs.hi()));
        cert.has_inequality = true;

        stage = "crossing";
        std::vector<ShotCandidate> cands;
        for (double f : {1.01, 1.02, 1.05, 1.1}) {
            double y_start = -cfg.L2 * f;
            for (int i = 0; i < cfg.seed_grid; ++i) {
                double sx = static_cast<double>(i) / cfg.seed_grid;
                double x = sx, y = y_start;
                for (int n = 1; n <= cfg.max_iter; ++n) {
                    double X, Y;
                    F.eval_pt(x, y, X, Y);
                    x = X;
                    y = Y;
                    if (!std::isfinite(x) || !std::isfinite(y)) break;
                    if (y > cfg.L2 + 0.02) {
                        cands.push_back({n, sx, y_start});
                        break;
                    }
                }
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const ShotCandidate& u, const ShotCandidate& v) {
                      return u.steps < v.steps;
                  });
        if (cands.empty())
            throw NoCrossingFound("no orbit from below -L2 reaches above +L2 within " +
                                  std::to_string(cfg.max_iter) + " iterates");
        bool done = false;
        for (std::size_t ci = 0; ci < cands.size() && ci < 12 && !done; ++ci) {
            for (int n = cands[ci].steps;
                 n <= std::min(cands[ci].steps + 1, cfg.max_iter) && !done; ++n) {
                OrbitEnclosure orb;
                try {
                    orb = enclose_orbit(F, IBox(Interval(cands[ci].sx), Interval(cands[ci].sy)),
                                        n, Direction::Forward);
                } catch (const BlowupError&) {
                    break;
                }
                auto below = crossing_check(orb, cfg.L2, Side::Below);
                auto above = crossing_check(orb, cfg.L2, Side::Above);
                if (below && above) {
                    cert.crossing = std::move(orb);
                    cert.below_step = *below;
                    cert.above_step = *above;
                    cert.has_crossing = true;
                    done = true;
                }
            }
        }
        if (!done)
            throw NoCrossingFound("crossing candidates failed rigorous validation");

        stage = "fixed_points";
        FixedPointCert certs[2];
        for (int pi = 0; pi < 2; ++pi) {
            int p = pi == 0 ? -1 : 1;
            // height candidates: minimizers of |h(y) - p| on the L1 band
            std::vector<double> ys;
            {
                const int G = 2048;
                double best = 1e300, besty = 0.0;
                for (int g = 0; g <= G; ++g) {
                    double y = -cfg.L1 + 2.0 * cfg.L1 * g / G;
                    double d = std::fabs(h->eval(y) - p);
                    if (d < best) {
                        best = d;
                        besty = y;
                    }
                    // keep local minimizers too (h may reach p several times)
                    if (g > 1) {
                        double ym = -cfg.L1 + 2.0 * cfg.L1 * (g - 1) / G;
                        double d0 = std::fabs(h->eval(-cfg.L1 + 2.0 * cfg.L1 * (g - 2) / G) - p);
                        double d1 = std::fabs(h->eval(ym) - p);
                        if (d1 <= d0 && d1 <= d && d1 < 0.2) ys.push_back(ym);
                    }
                }
                ys.push_back(besty);
            }
            // anchor candidates: zeros of v(sin(2*pi*x))
            std::vector<double> xs;
            {
                const int G = 512;
                auto g_of = [&](double x) {
                    return w->eval(std::sin(2.0 * M_PI * x)) - F.mean().mid();
                };
                double prev = g_of(0.0);
                for (int g = 1; g <= G; ++g) {
                    double x = static_cast<double>(g) / G;
                    double cur = g_of(x);
                    if ((prev <= 0.0 && cur >= 0.0) || (prev >= 0.0 && cur <= 0.0)) {
                        double lo = static_cast<double>(g - 1) / G, hi = x;
                        for (int it = 0; it < 60; ++it) {
                            double mid = 0.5 * (lo + hi);
                            if ((g_of(lo) <= 0.0) == (g_of(mid) <= 0.0)) lo = mid;
                            else hi = mid;
                        }
                        xs.push_back(0.5 * (lo + hi));
                    }
                    prev = cur;
                }
            }
            bool found = false;
            std::string last_err = "no seed candidates";
            for (double yc : ys) {
                for (double xc : xs) {
                    try {
                        certs[pi] = certify_fixed_point(
                            F, IBox(Interval(xc - 0.01, xc + 0.01), Interval(yc - 0.01, yc + 0.01)),
                            p);
                        found = true;
                        break;
                    } catch (const Error& e) {
                        last_err = e.what();
                    }
                }
                if (found) break;
            }
            if (!found)
                throw NoFixedPointPair("rotation " + std::to_string(p) +
                                       " fixed point: " + last_err);
        }
        cert.c0 = certs[0];
        cert.c1 = certs[1];
        cert.rho = cert.c1.rotation - cert.c0.rotation;
        cert.c_coeff = cert.rho == 1 ? 3 : (cert.rho == 2 ? 2 : 1);
        cert.has_fixed_points = true;

        cert.verdict = "certified";
    } catch (const Error& e) {
        cert.verdict = fail_verdict(stage, e);
    }
    return cert;
}

std::string SweepResult::csv() const
{
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << quote(header[i]);
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << quote(row[i]);
        os << "\n";
    }
    return os.str();
}

namespace {

template <typename Cfg, typename Fn>
SweepResult run_sweep(const std::vector<Cfg>& grid, int threads, std::vector<std::string> header,
                      Fn cell)
{
    SweepResult out;
    out.header = std::move(header);
    if (grid.empty()) return out;
    unsigned cap = threads > 0 ? static_cast<unsigned>(threads)
                               : std::max(1u, std::thread::hardware_concurrency());
    out.rows.resize(grid.size());
    std::size_t next = 0;
    while (next < grid.size()) {
        std::size_t batch = std::min<std::size_t>(cap, grid.size() - next);
        std::vector<std::future<std::vector<std::string>>> futs;
        for (std::size_t k = 0; k < batch; ++k)
            futs.push_back(std::async(std::launch::async, cell, std::cref(grid[next + k])));
        for (std::size_t k = 0; k < batch; ++k) out.rows[next + k] = futs[k].get();
        next += batch;
    }
    return out;
}

std::string fmt_g(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

SweepResult sweep_dissipative(const std::vector<DissipativeConfig>& grid, int threads)
{
    return run_sweep(grid, threads,
                     {"a", "b", "verdict", "rho", "N", "max_backward_steps", "wall_s"},
                     [](const DissipativeConfig& cfg) -> std::vector<std::string> {
                         auto t0 = std::chrono::steady_clock::now();
                         std::string verdict;
                         int rho = 0, N = 0, mb = -1;
                         try {
                             DissipativeCertificate c = certify_dissipative(cfg);
                             verdict = c.verdict;
                             rho = c.rho;
                             N = c.N;
                             mb = max_backward_steps(c);
                         } catch (const std::exception& e) {
                             verdict = std::string("error: ") + e.what();
                         }
                         double dt = std::chrono::duration<double>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count();
                         return {fmt_g(cfg.a.mid()), fmt_g(cfg.b.mid()), verdict,
                                 std::to_string(rho), std::to_string(N), std::to_string(mb),
                                 fmt_g(dt)};
                     });
}

SweepResult sweep_hamiltonian(const std::vector<HamiltonianConfig>& grid, int threads)
{
    return run_sweep(
        grid, threads,
        {"h", "w", "L1", "L2", "verdict", "rho", "c_coeff", "NL2_bound", "crossing_step",
         "wall_s"},
        [](const HamiltonianConfig& cfg) -> std::vector<std::string> {
            auto t0 = std::chrono::steady_clock::now();
            std::string verdict;
            int rho = 0, cc = 0, cross = -1;
            double nl2 = 0.0;
            try {
                HamiltonianCertificate c = certify_hamiltonian(cfg);
                verdict = c.verdict;
                rho = c.rho;
                cc = c.c_coeff;
                nl2 = c.NL2_bound;
                cross = c.above_step;
            } catch (const std::exception& e) {
                verdict = std::string("error: ") + e.what();
            }
            double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return {cfg.h, cfg.w, fmt_g(cfg.L1), fmt_g(cfg.L2), verdict, std::to_string(rho),
                    std::to_string(cc), fmt_g(nl2), std::to_string(cross), fmt_g(dt)};
        });
}

} // namespace horseshoe
