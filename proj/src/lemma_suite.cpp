#include "horseshoe/lemma_suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace horseshoe {

namespace {

constexpr int kShards = 64;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    long i(long lo, long hi) // inclusive
    {
        return std::uniform_int_distribution<long>(lo, hi)(g);
    }
    Rational q(long lo, long hi) { return Rational(i(lo, hi), 64); }
    bool flip() { return (g() & 1u) != 0; }
};

// n distinct integers in [lo, hi], sorted ascending
std::vector<long> distinct_sorted(Rng& r, int n, long lo, long hi)
{
    std::set<long> s;
    while (static_cast<int>(s.size()) < n) s.insert(r.i(lo, hi));
    return {s.begin(), s.end()};
}

// the arc meets none of its own deck translates, so its projection is
// an embedded (hence inessential) arc of the annulus
bool translate_free(const Polyline& p)
{
    long span = r_ceil(p.max_x() - p.min_x()) + 1;
    for (long k = 1; k <= span; ++k) {
        try {
            if (polylines_meet(p, p.translated(Rational(k)))) return false;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

// strictly y-monotone chain: automatically simple and translate-free
Polyline gen_monotone(Rng& r)
{
    int m = static_cast<int>(r.i(2, 5));
    Rational x = r.q(-128, 128), y = r.q(-128, 128);
    Polyline p;
    p.vertices.push_back({x, y});
    Rational dir = r.flip() ? 1 : -1;
    for (int k = 0; k < m; ++k) {
        x += r.q(-80, 80);
        y += dir * r.q(8, 48);
        p.vertices.push_back({x, y});
    }
    return p;
}

// free-form chain kept inside one period so translates cannot meet
Polyline gen_small(Rng& r)
{
    int m = static_cast<int>(r.i(1, 3));
    Rational x = r.q(-128, 128), y = r.q(-128, 128);
    Polyline p;
    p.vertices.push_back({x, y});
    for (int k = 0; k < m; ++k) {
        x += r.q(-18, 18);
        y += r.q(-48, 48);
        p.vertices.push_back({x, y});
    }
    if (p.max_x() - p.min_x() >= 1) p.vertices.clear();
    return p;
}

struct Shard {
    LemmaReport rep;
};

template <class One>
LemmaReport run_sharded(const char* name, std::uint64_t seed, long long count,
                        int threads, One one)
{
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Shard> shards(kShards);
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            int s = next.fetch_add(1);
            if (s >= kShards) return;
            long long target = count / kShards + (s < count % kShards ? 1 : 0);
            // splitmix to decorrelate shard streams from a single seed
            std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (s + 1);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            Rng rng(z ^ (z >> 31));
            LemmaReport& rep = shards[s].rep;
            long long attempts = 0, cap = 500 * target + 500;
            while (rep.checked < target && attempts < cap) {
                ++attempts;
                if (!one(rng, rep)) ++rep.discarded;
            }
        }
    };
    int n_threads = std::max(1, std::min(threads, kShards));
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    LemmaReport out;
    out.name = name;
    for (const Shard& s : shards) {
        out.checked += s.rep.checked;
        out.discarded += s.rep.discarded;
        out.violations += s.rep.violations;
        out.mismatches += s.rep.mismatches;
        if (s.rep.min_slack >= 0 &&
            (out.min_slack < 0 || s.rep.min_slack < out.min_slack))
            out.min_slack = s.rep.min_slack;
        if (out.note.empty()) out.note = s.rep.note;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

void fail(LemmaReport& rep, bool mismatch, const std::string& what)
{
    if (mismatch)
        ++rep.mismatches;
    else
        ++rep.violations;
    if (rep.note.empty()) rep.note = what;
}

// ---- (a) theta interval property ------------------------------------

bool one_theta(Rng& r, LemmaReport& rep)
{
    Polyline A = r.flip() ? gen_monotone(r) : gen_small(r);
    Polyline B = r.flip() ? gen_monotone(r) : gen_small(r);
    if (A.vertices.empty() || B.vertices.empty()) return false;
    if (!is_simple(A) || !is_simple(B)) return false;
    if (!translate_free(A) || !translate_free(B)) return false;
    int th, tho;
    bool ivl;
    try {
        th = theta(A, B);
        tho = theta_oracle(A, B);
        ivl = interval_property(A, B);
    } catch (const Error&) {
        return false; // degenerate contact
    }
    if (th < 1) return false; // vacuous draw
    ++rep.checked;
    if (th != tho)
        fail(rep, true, "theta fast=" + std::to_string(th) + " oracle=" + std::to_string(tho));
    if (!ivl) fail(rep, false, "offsets of a valid pair are not contiguous");
    return true;
}

// ---- (b) nu vs theta bound ------------------------------------------

// strictly increasing y-path between two fixed endpoints
Polyline gen_mono_between(Rng& r, const RPoint& p, const RPoint& q)
{
    int m = static_cast<int>(r.i(1, 3)); // interior vertices
    long ylo = static_cast<long>(p.y * 64), yhi = static_cast<long>(q.y * 64);
    if (yhi - ylo < m + 1) m = 0;
    Polyline a;
    a.vertices.push_back(p);
    if (m > 0) {
        std::vector<long> ys = distinct_sorted(r, m, ylo + 1, yhi - 1);
        for (long y : ys) a.vertices.push_back({p.x + r.q(-128, 128), Rational(y, 64)});
    }
    a.vertices.push_back(q);
    return a;
}

bool one_nu_theta(Rng& r, LemmaReport& rep)
{
    RPoint p{r.q(-128, 128), r.q(-128, 128)};
    RPoint q{p.x + r.q(-96, 96), p.y + r.q(80, 192)};
    Polyline A = gen_mono_between(r, p, q);
    Polyline B = gen_mono_between(r, p, q);
    Polyline K = gen_small(r);
    if (K.vertices.empty()) return false;
    // drop K near the configuration so nu is usually defined
    Rational cx = (p.x + q.x) / 2 + r.q(-96, 96);
    Rational cy = (p.y + q.y) / 2 + r.q(-96, 96);
    K = K.translated(cx - K.vertices.front().x, cy - K.vertices.front().y);
    if (!is_simple(A) || !is_simple(B) || !is_simple(K)) return false;
    if (!translate_free(K)) return false;
    int na, nb, th;
    try {
        na = nu(A, K);
        nb = nu(B, K);
        th = theta(A, B);
        if (na != nu_oracle(A, K) || nb != nu_oracle(B, K) || th != theta_oracle(A, B)) {
            ++rep.checked;
            fail(rep, true, "nu/theta oracle disagreement");
            return true;
        }
    } catch (const Error&) {
        return false; // no intersection or degenerate contact
    }
    ++rep.checked;
    int slack = 2 * th + 1 - std::abs(na - nb);
    if (rep.min_slack < 0 || slack < rep.min_slack) rep.min_slack = slack;
    if (slack < 0)
        fail(rep, false,
             "nu gap " + std::to_string(std::abs(na - nb)) + " exceeds 2*" +
                 std::to_string(th) + "+1");
    return true;
}

// ---- (c) separation inequality --------------------------------------

bool one_sep(Rng& r, LemmaReport& rep)
{
    int N = static_cast<int>(r.i(1, 3));
    std::vector<long> d = distinct_sorted(r, N, 2, 30);   // s_i = i - d_i/64
    std::vector<long> h = distinct_sorted(r, N + 1, -60, -4);
    bool mirror = r.flip();
    bool reverse = r.flip();
    Rational shift = r.q(-128, 128);
    auto Y = [&](long y64) { return Rational(mirror ? -y64 : y64, 64); };

    Polyline gamma;
    gamma.vertices.push_back({Rational(0), Y(h[0])});
    for (int i = 1; i <= N; ++i) {
        Rational s = Rational(i) - Rational(d[i - 1], 64);
        gamma.vertices.push_back({s, Y(h[i - 1])});
        gamma.vertices.push_back({s, Y(h[i])});
    }
    gamma.vertices.push_back({Rational(N), Y(h[N])});
    if (reverse) gamma = gamma.reversed();

    Polyline A;
    A.vertices.push_back({Rational(0), Rational(0)});
    A.vertices.push_back({Rational(0), Y(-64)});
    if (r.flip()) A.vertices.push_back({r.q(-16, 16), Y(-64 - r.i(8, 32))});
    A = A.translated(shift);
    gamma = gamma.translated(shift);
    RPoint x{shift, Rational(0)};

    ++rep.checked;
    try {
        int nuv = std::abs(nu(gamma, A));
        int nuo = std::abs(nu_oracle(gamma, A));
        if (nuv != N || nuo != N) {
            fail(rep, true, "staircase nu " + std::to_string(nuv) + " != " + std::to_string(N));
            return true;
        }
        SepReport up = sep_detail(x, A, gamma, SepSide::Upper);
        SepReport lo = sep_detail(x, A, gamma, SepSide::Lower);
        int upo = sep_oracle(x, A, gamma, SepSide::Upper);
        int loo = sep_oracle(x, A, gamma, SepSide::Lower);
        if (up.value != upo || lo.value != loo) {
            fail(rep, true, "sep fast/oracle disagreement");
            return true;
        }
        int slack = up.value + lo.value - nuv;
        if (rep.min_slack < 0 || slack < rep.min_slack) rep.min_slack = slack;
        if (slack < 0) fail(rep, false, "sep+ + sep- below |nu|");
    } catch (const Error& e) {
        // the construction satisfies every hypothesis, so any throw is a bug
        fail(rep, false, std::string("unexpected: ") + e.what());
    }
    return true;
}

// ---- (d) mu interval property ---------------------------------------

Rectangle4 gen_quad(Rng& r)
{
    auto j = [&]() { return r.q(-8, 8); };
    RPoint c00{j(), j()};
    RPoint c01{j(), Rational(1) + j()};
    RPoint c11{Rational(3, 4) + j(), Rational(1) + j()};
    RPoint c10{Rational(3, 4) + j(), j()};
    Rectangle4 R;
    R.a = Polyline{{c00, c01}, false};
    R.Iplus = Polyline{{c01, c11}, false};
    R.b = Polyline{{c11, c10}, false};
    R.Iminus = Polyline{{c10, c00}, false};
    return R;
}

// Spiral snake: 2P strands crossing the band y in [0,1], joined below by
// period-advancing loops and above by short caps. Fractional strand
// positions are nested (evens ascending, odds descending) so later
// strands thread the uncovered gap of every earlier loop; cap heights
// decrease and loop depths increase so nothing else can collide.
Polyline gen_snake(Rng& r, int P)
{
    int S = 2 * P;
    std::vector<long> v = distinct_sorted(r, S, -14, 14);
    std::vector<Rational> eta(S + 1);
    for (int k = 1; k <= P; ++k) eta[2 * k] = Rational(v[k - 1], 64);
    for (int k = 0; k < P; ++k) eta[2 * k + 1] = Rational(v[S - 1 - k], 64);
    auto X = [&](int jj) { return Rational(jj / 2) + Rational(1, 2) + eta[jj]; };

    std::vector<Rational> b(P + 1), t(P + 1);
    for (int l = 1; l <= P; ++l) b[l] = Rational(-20 - 10 * l - r.i(0, 4), 64);
    for (int l = 1; l < P; ++l) t[l] = Rational(84 + 10 * (P - l) + r.i(0, 4), 64);
    Rational t0 = (P > 1 ? t[1] : Rational(84, 64)) + Rational(r.i(4, 8), 64);
    Rational tend = (P > 1 ? t[P - 1] : t0) - Rational(r.i(4, 8), 64);

    Rational tick(1, 64);
    Polyline c;
    c.vertices.push_back({X(1), t0});
    for (int l = 1; l <= P; ++l) {
        c.vertices.push_back({X(2 * l - 1), b[l]});
        c.vertices.push_back({X(2 * l), b[l] - tick});
        if (l < P) {
            c.vertices.push_back({X(2 * l), t[l]});
            c.vertices.push_back({X(2 * l + 1), t[l] + tick});
        }
    }
    c.vertices.push_back({X(S), tend});
    return c.translated(r.q(-256, 256));
}

bool one_mu(Rng& r, LemmaReport& rep)
{
    Rectangle4 R = gen_quad(r);
    try {
        R.polygon();
    } catch (const Error&) {
        return false;
    }
    Polyline C = gen_snake(r, static_cast<int>(r.i(1, 3)));
    if (r.flip()) C = C.reversed();
    if (!is_simple(C) || !translate_free(C)) return false;
    std::vector<long> q;
    int m, mo;
    try {
        q = mu_offsets(R, C);
        m = mu(R, C);
        mo = mu_oracle(R, C);
    } catch (const Error&) {
        return false; // empty offset set or degenerate contact
    }
    ++rep.checked;
    if (m != mo) fail(rep, true, "mu fast=" + std::to_string(m) + " oracle=" + std::to_string(mo));
    bool contiguous = !q.empty() && std::is_sorted(q.begin(), q.end()) &&
                      q.back() - q.front() + 1 == static_cast<long>(q.size());
    if (!contiguous) fail(rep, false, "qualifying offsets are not contiguous");
    return true;
}

} // namespace

int default_thread_count()
{
    if (const char* env = std::getenv("HORSESHOE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

LemmaReport check_theta_interval(std::uint64_t seed, long long count, int threads)
{
    return run_sharded("theta-interval", seed, count, threads, one_theta);
}

LemmaReport check_nu_theta(std::uint64_t seed, long long count, int threads)
{
    return run_sharded("nu-theta-bound", seed, count, threads, one_nu_theta);
}

LemmaReport check_sep_inequality(std::uint64_t seed, long long count, int threads)
{
    return run_sharded("sep-inequality", seed, count, threads, one_sep);
}

LemmaReport check_mu_interval(std::uint64_t seed, long long count, int threads)
{
    return run_sharded("mu-interval", seed, count, threads, one_mu);
}

std::vector<LemmaReport> check_all(std::uint64_t seed, long long count, int threads)
{
    return {check_theta_interval(seed, count, threads),
            check_nu_theta(seed ^ 0xa5a5a5a5ull, count, threads),
            check_sep_inequality(seed ^ 0x5a5a5a5aull, count, threads),
            check_mu_interval(seed ^ 0x3c3c3c3cull, count, threads)};
}

std::string format_report(const LemmaReport& r)
{
    std::ostringstream os;
    os << r.name << ": checked=" << r.checked << " discarded=" << r.discarded
       << " violations=" << r.violations << " mismatches=" << r.mismatches;
    if (r.min_slack >= 0) os << " min_slack=" << r.min_slack;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << "s)";
    if (!r.note.empty()) os << " note: " << r.note;
    return os.str();
}

} // namespace horseshoe
