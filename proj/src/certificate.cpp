#include "horseshoe/certificate.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace horseshoe {

using nlohmann::ordered_json;

namespace {

std::string hex_str(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double hex_parse(const ordered_json& j)
{
    if (!j.is_string()) throw SchemaMismatch("expected hex-float string");
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw SchemaMismatch("malformed hex-float: " + s);
    return v;
}

std::string side_str(Side s) { return s == Side::Above ? "above" : "below"; }

Side side_parse(const ordered_json& j)
{
    std::string s = j.get<std::string>();
    if (s == "above") return Side::Above;
    if (s == "below") return Side::Below;
    throw SchemaMismatch("unknown side: " + s);
}

ordered_json point_to_json(double x, double y)
{
    return ordered_json::array({hex_str(x), hex_str(y)});
}

ordered_json segments_to_json(const std::array<PointArray, 4>& segs)
{
    ordered_json out = ordered_json::array();
    for (const PointArray& s : segs) {
        ordered_json seg = ordered_json::array();
        for (const auto& [x, y] : s) seg.push_back(point_to_json(x, y));
        out.push_back(std::move(seg));
    }
    return out;
}

std::array<PointArray, 4> segments_from_json(const ordered_json& j)
{
    if (!j.is_array() || j.size() != 4) throw SchemaMismatch("segments must be 4 arrays");
    std::array<PointArray, 4> segs;
    for (int i = 0; i < 4; ++i)
        for (const auto& p : j[static_cast<std::size_t>(i)])
            segs[static_cast<std::size_t>(i)].emplace_back(hex_parse(p.at(0)),
                                                           hex_parse(p.at(1)));
    return segs;
}

} // namespace

ordered_json to_json(const Interval& x)
{
    return ordered_json::array({hex_str(x.lo()), hex_str(x.hi())});
}

ordered_json to_json(const IBox& b)
{
    return ordered_json{{"x", to_json(b.x)}, {"y", to_json(b.y)}};
}

ordered_json to_json(const FixedPointCert& c)
{
    return ordered_json{{"box", to_json(c.box)},
                        {"rotation", c.rotation},
                        {"family", c.family},
                        {"method", c.method},
                        {"newton_radius_ratio", hex_str(c.newton_radius_ratio)},
                        {"existence_only", c.existence_only}};
}

ordered_json to_json(const OrbitEnclosure& o)
{
    ordered_json boxes = ordered_json::array();
    for (const IBox& b : o.boxes) boxes.push_back(to_json(b));
    ordered_json events = ordered_json::array();
    for (const auto& [step, pieces] : o.subdivision_events)
        events.push_back(ordered_json::array({step, pieces}));
    return ordered_json{{"direction", o.direction == Direction::Forward ? "forward" : "backward"},
                        {"seed", to_json(o.seed)},
                        {"boxes", std::move(boxes)},
                        {"subdivision_events", std::move(events)}};
}

Interval interval_from_json(const ordered_json& j)
{
    if (!j.is_array() || j.size() != 2) throw SchemaMismatch("interval must be a 2-array");
    return Interval(hex_parse(j[0]), hex_parse(j[1]));
}

IBox box_from_json(const ordered_json& j)
{
    return IBox(interval_from_json(j.at("x")), interval_from_json(j.at("y")));
}

FixedPointCert fixed_point_from_json(const ordered_json& j)
{
    FixedPointCert c;
    c.box = box_from_json(j.at("box"));
    c.rotation = j.at("rotation").get<int>();
    c.family = j.at("family").get<std::string>();
    c.method = j.at("method").get<std::string>();
    c.newton_radius_ratio = hex_parse(j.at("newton_radius_ratio"));
    c.existence_only = j.at("existence_only").get<bool>();
    return c;
}

OrbitEnclosure orbit_from_json(const ordered_json& j)
{
    OrbitEnclosure o;
    std::string dir = j.at("direction").get<std::string>();
    if (dir != "forward" && dir != "backward") throw SchemaMismatch("bad direction: " + dir);
    o.direction = dir == "forward" ? Direction::Forward : Direction::Backward;
    o.seed = box_from_json(j.at("seed"));
    for (const auto& b : j.at("boxes")) o.boxes.push_back(box_from_json(b));
    for (const auto& e : j.at("subdivision_events"))
        o.subdivision_events.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (o.boxes.empty()) throw SchemaMismatch("orbit with no boxes");
    return o;
}

ordered_json to_json(const DissipativeCertificate& c)
{
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"pipeline", "dissipative"},
                   {"tool_version", kToolVersion},
                   {"a", to_json(c.a)},
                   {"b", to_json(c.b)},
                   {"power", c.power},
                   {"b_level", hex_str(c.b_level)},
                   {"rho", c.rho},
                   {"N", c.N}};
    if (c.has_fixed_points)
        j["fixed_points"] = ordered_json{{"c0", to_json(c.c0)}, {"c1", to_json(c.c1)}};
    else
        j["fixed_points"] = nullptr;
    if (c.has_free_curves) {
        ordered_json fc = ordered_json::array();
        for (const FreeCurveRecord& r : c.free_curves)
            fc.push_back(ordered_json{{"level", hex_str(r.level)},
                                      {"slices", r.slices},
                                      {"image_y", to_json(r.image_y)}});
        j["free_curves"] = std::move(fc);
    } else {
        j["free_curves"] = nullptr;
    }
    if (c.has_witnesses) {
        j["segments"] = segments_to_json(c.segments);
        ordered_json ws = ordered_json::array();
        for (const WitnessRecord& w : c.witnesses)
            ws.push_back(ordered_json{{"point", point_to_json(w.px, w.py)},
                                      {"side", side_str(w.side)},
                                      {"crossing_step", w.crossing_step},
                                      {"orbit", to_json(w.orbit)}});
        j["witnesses"] = std::move(ws);
    } else {
        j["segments"] = nullptr;
        j["witnesses"] = nullptr;
    }
    if (c.has_dpn)
        j["dpn"] = ordered_json{{"epsilon", hex_str(c.dpn.epsilon)},
                                {"delta", hex_str(c.dpn.delta)},
                                {"eta", hex_str(c.dpn.eta)},
                                {"N", c.dpn.N},
                                {"sample_count", c.dpn.sample_count},
                                {"crude_value", hex_str(c.dpn.crude_value)},
                                {"crude_pass", c.dpn.crude_pass},
                                {"pass", c.dpn.pass},
                                {"B0", to_json(c.dpn.B0)},
                                {"B1", to_json(c.dpn.B1)}};
    else
        j["dpn"] = nullptr;
    j["verdict"] = c.verdict;
    j["timestamp"] = c.timestamp;
    return j;
}

ordered_json to_json(const HamiltonianCertificate& c)
{
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"pipeline", "hamiltonian"},
                   {"tool_version", kToolVersion},
                   {"h", c.h_str},
                   {"w", c.w_str},
                   {"power", c.power},
                   {"mean_slices", c.mean_slices},
                   {"mean", to_json(c.mean)},
                   {"L1", hex_str(c.L1)},
                   {"L2", hex_str(c.L2)},
                   {"rho", c.rho},
                   {"c_coeff", c.c_coeff},
                   {"NL2_bound", hex_str(c.NL2_bound)}};
    if (c.has_fixed_points)
        j["fixed_points"] = ordered_json{{"c0", to_json(c.c0)}, {"c1", to_json(c.c1)}};
    else
        j["fixed_points"] = nullptr;
    if (c.has_inequality)
        j["inequality"] = ordered_json{{"lhs", to_json(c.ineq_lhs)}, {"rhs", to_json(c.ineq_rhs)}};
    else
        j["inequality"] = nullptr;
    if (c.has_crossing)
        j["crossing"] = ordered_json{{"orbit", to_json(c.crossing)},
                                     {"below_step", c.below_step},
                                     {"above_step", c.above_step}};
    else
        j["crossing"] = nullptr;
    j["assumption"] = c.assumption;
    j["verdict"] = c.verdict;
    j["timestamp"] = c.timestamp;
    return j;
}

DissipativeCertificate dissipative_from_json(const ordered_json& j)
{
    DissipativeCertificate c;
    c.a = interval_from_json(j.at("a"));
    c.b = interval_from_json(j.at("b"));
    c.power = j.value("power", 1);
    if (c.power < 1) throw SchemaMismatch("power must be >= 1");
    c.b_level = hex_parse(j.at("b_level"));
    c.rho = j.at("rho").get<int>();
    c.N = j.at("N").get<int>();
    if (!j.at("fixed_points").is_null()) {
        c.c0 = fixed_point_from_json(j.at("fixed_points").at("c0"));
        c.c1 = fixed_point_from_json(j.at("fixed_points").at("c1"));
        c.has_fixed_points = true;
    }
    if (!j.at("free_curves").is_null()) {
        const auto& fc = j.at("free_curves");
        if (fc.size() != 2) throw SchemaMismatch("free_curves must have 2 records");
        for (int i = 0; i < 2; ++i) {
            const auto& r = fc[static_cast<std::size_t>(i)];
            c.free_curves[static_cast<std::size_t>(i)] =
                FreeCurveRecord{hex_parse(r.at("level")), r.at("slices").get<int>(),
                                interval_from_json(r.at("image_y"))};
        }
        c.has_free_curves = true;
    }
    if (!j.at("witnesses").is_null()) {
        c.segments = segments_from_json(j.at("segments"));
        const auto& ws = j.at("witnesses");
        if (ws.size() != 4) throw SchemaMismatch("witnesses must have 4 records");
        for (int i = 0; i < 4; ++i) {
            const auto& w = ws[static_cast<std::size_t>(i)];
            WitnessRecord& rec = c.witnesses[static_cast<std::size_t>(i)];
            rec.px = hex_parse(w.at("point").at(0));
            rec.py = hex_parse(w.at("point").at(1));
            rec.side = side_parse(w.at("side"));
            rec.crossing_step = w.at("crossing_step").get<int>();
            rec.orbit = orbit_from_json(w.at("orbit"));
        }
        c.has_witnesses = true;
    }
    if (!j.at("dpn").is_null()) {
        const auto& d = j.at("dpn");
        c.dpn.epsilon = hex_parse(d.at("epsilon"));
        c.dpn.delta = hex_parse(d.at("delta"));
        c.dpn.eta = hex_parse(d.at("eta"));
        c.dpn.N = d.at("N").get<int>();
        c.dpn.sample_count = d.at("sample_count").get<std::size_t>();
        c.dpn.crude_value = hex_parse(d.at("crude_value"));
        c.dpn.crude_pass = d.at("crude_pass").get<bool>();
        c.dpn.pass = d.at("pass").get<bool>();
        c.dpn.B0 = box_from_json(d.at("B0"));
        c.dpn.B1 = box_from_json(d.at("B1"));
        c.has_dpn = true;
    }
    c.verdict = j.at("verdict").get<std::string>();
    c.timestamp = j.at("timestamp").get<std::string>();
    return c;
}

HamiltonianCertificate hamiltonian_from_json(const ordered_json& j)
{
    HamiltonianCertificate c;
    c.h_str = j.at("h").get<std::string>();
    c.w_str = j.at("w").get<std::string>();
    c.power = j.value("power", 1);
    if (c.power < 1) throw SchemaMismatch("power must be >= 1");
    c.mean_slices = j.at("mean_slices").get<int>();
    c.mean = interval_from_json(j.at("mean"));
    c.L1 = hex_parse(j.at("L1"));
    c.L2 = hex_parse(j.at("L2"));
    c.rho = j.at("rho").get<int>();
    c.c_coeff = j.at("c_coeff").get<int>();
    c.NL2_bound = hex_parse(j.at("NL2_bound"));
    if (!j.at("fixed_points").is_null()) {
        c.c0 = fixed_point_from_json(j.at("fixed_points").at("c0"));
        c.c1 = fixed_point_from_json(j.at("fixed_points").at("c1"));
        c.has_fixed_points = true;
    }
    if (!j.at("inequality").is_null()) {
        c.ineq_lhs = interval_from_json(j.at("inequality").at("lhs"));
        c.ineq_rhs = interval_from_json(j.at("inequality").at("rhs"));
        c.has_inequality = true;
    }
    if (!j.at("crossing").is_null()) {
        c.crossing = orbit_from_json(j.at("crossing").at("orbit"));
        c.below_step = j.at("crossing").at("below_step").get<int>();
        c.above_step = j.at("crossing").at("above_step").get<int>();
        c.has_crossing = true;
    }
    c.assumption = j.at("assumption").get<std::string>();
    c.verdict = j.at("verdict").get<std::string>();
    c.timestamp = j.at("timestamp").get<std::string>();
    return c;
}

namespace {

int ceil_div_34(int rho) { return (34 + rho - 1) / rho; }

// recomputes a thin-seed orbit and checks the stored boxes still contain
// it step by step
void recheck_orbit(const MapFamily& F, const OrbitEnclosure& stored, const std::string& tag,
                   std::vector<std::string>& bad)
{
    if (stored.seed.width() > 1e-9) {
        bad.push_back(tag + ": seed box is not thin");
        return;
    }
    if (!stored.boxes.front().contains(stored.seed)) {
        bad.push_back(tag + ": seed not contained in first box");
        return;
    }
    try {
        OrbitEnclosure redo = enclose_orbit(F, stored.seed,
                                            static_cast<int>(stored.boxes.size()) - 1,
                                            stored.direction);
        for (std::size_t k = 0; k < stored.boxes.size(); ++k)
            if (!stored.boxes[k].contains(redo.boxes[k])) {
                bad.push_back(tag + ": recomputed step " + std::to_string(k) +
                              " escapes the stored box");
                return;
            }
    } catch (const Error& e) {
        bad.push_back(tag + ": orbit recomputation failed: " + e.what());
    }
}

bool crossing_holds(const IBox& b, double level, Side side)
{
    return side == Side::Above ? b.y.lo() > level : b.y.hi() < -level;
}

std::vector<std::string> recheck_dissipative(const DissipativeCertificate& c)
{
    std::vector<std::string> bad;
    MapFamily F = MapFamily::dissipative(c.a, c.b);
    if (c.power > 1) F = F.powered(c.power);

    if (c.has_fixed_points) {
        if (!recheck_fixed_point(F, c.c0)) bad.push_back("fixed_points.c0: inclusion test fails");
        if (!recheck_fixed_point(F, c.c1)) bad.push_back("fixed_points.c1: inclusion test fails");
        if (c.rho != c.c1.rotation - c.c0.rotation)
            bad.push_back("rho: does not equal the rotational difference");
        if (c.rho < 1) bad.push_back("rho: must be >= 1");
        else if (c.N != ceil_div_34(c.rho)) bad.push_back("N: not ceil(34/rho)");
    }

    if (c.has_free_curves) {
        for (int i = 0; i < 2; ++i) {
            const FreeCurveRecord& r = c.free_curves[static_cast<std::size_t>(i)];
            std::string tag = "free_curves[" + std::to_string(i) + "]";
            if (std::fabs(std::fabs(r.level) - c.b_level) > 0.0)
                bad.push_back(tag + ": level does not match b_level");
            if (!(r.image_y.lo() > -c.b_level && r.image_y.hi() < c.b_level))
                bad.push_back(tag + ": image bound not strictly inside the band");
            Interval hull = r.image_y;
            bool first = true;
            for (int s = 0; s < r.slices; ++s) {
                Interval X(static_cast<double>(s) / r.slices,
                           static_cast<double>(s + 1) / r.slices);
                Interval Y = F.eval_lift(IBox(X, Interval(r.level))).y;
                hull = first ? Y : Interval::hull(hull, Y);
                first = false;
            }
            if (!hull.subset_of(r.image_y))
                bad.push_back(tag + ": stored image bound does not contain the recomputation");
        }
    }

    if (c.has_witnesses) {
        if (!c.has_fixed_points) {
            bad.push_back("witnesses: present without fixed points");
        } else {
            const FixedPointCert* cs[2] = {&c.c0, &c.c1};
            for (int i = 0; i < 4; ++i) {
                const WitnessRecord& w = c.witnesses[static_cast<std::size_t>(i)];
                const PointArray& seg = c.segments[static_cast<std::size_t>(i)];
                std::string tag = "witnesses[" + std::to_string(i) + "]";
                if (w.side != (i % 2 == 0 ? Side::Above : Side::Below))
                    bad.push_back(tag + ": unexpected side");
                if (seg.empty() || seg.back().first != w.px || seg.back().second != w.py)
                    bad.push_back(tag + ": segment endpoint differs from witness point");
                const IBox& fp = cs[i / 2]->box;
                if (!seg.empty() &&
                    !fp.inflated(1e-9).contains(seg.front().first, seg.front().second))
                    bad.push_back(tag + ": segment does not start at the fixed point");
                if (w.orbit.direction != Direction::Backward)
                    bad.push_back(tag + ": orbit must be backward");
                if (!w.orbit.seed.contains(w.px, w.py))
                    bad.push_back(tag + ": orbit seed does not contain the witness point");
                recheck_orbit(F, w.orbit, tag + ".orbit", bad);
                int ks = w.crossing_step;
                if (ks < 0 || ks >= static_cast<int>(w.orbit.boxes.size()) ||
                    !crossing_holds(w.orbit.boxes[static_cast<std::size_t>(ks)], c.b_level,
                                    w.side))
                    bad.push_back(tag + ": crossing step does not witness the crossing");
            }
        }
    }

    if (c.has_dpn) {
        if (!c.has_fixed_points || !c.has_witnesses) {
            bad.push_back("dpn: present without fixed points and witnesses");
        } else {
            if (c.dpn.N != c.N) bad.push_back("dpn.N: differs from certificate N");
            if (!c.dpn.pass) bad.push_back("dpn.pass: stored record is failing");
            if (c.dpn.crude_pass != (c.dpn.crude_value <= 0.5))
                bad.push_back("dpn.crude_pass: inconsistent with crude_value");
            try {
                DpnRecord redo = dpn_check(F, c.c0, c.c1, c.segments, c.dpn.N, c.dpn.epsilon);
                if (redo.delta != c.dpn.delta || redo.eta != c.dpn.eta ||
                    redo.crude_value != c.dpn.crude_value ||
                    redo.sample_count != c.dpn.sample_count)
                    bad.push_back("dpn: recomputed record differs from the stored one");
                if (!(redo.B0 == c.dpn.B0) || !(redo.B1 == c.dpn.B1))
                    bad.push_back("dpn: recomputed boxes differ from the stored ones");
            } catch (const Error& e) {
                bad.push_back(std::string("dpn: recomputation failed: ") + e.what());
            }
        }
    }

    bool complete = c.has_fixed_points && c.has_free_curves && c.has_witnesses && c.has_dpn;
    if (c.verdict == "certified" && !complete)
        bad.push_back("verdict: certified but stages are missing");
    return bad;
}

std::vector<std::string> recheck_hamiltonian(const HamiltonianCertificate& c)
{
    std::vector<std::string> bad;
    MapFamily F = MapFamily::generalized(parse_expr(c.h_str), parse_expr(c.w_str),
                                         c.mean_slices);
    if (c.power > 1) F = F.powered(c.power);
    if (!(F.mean() == c.mean)) bad.push_back("mean: recomputed enclosure differs");

    if (c.has_fixed_points) {
        if (!recheck_fixed_point(F, c.c0)) bad.push_back("fixed_points.c0: inclusion test fails");
        if (!recheck_fixed_point(F, c.c1)) bad.push_back("fixed_points.c1: inclusion test fails");
        if (c.rho != c.c1.rotation - c.c0.rotation)
            bad.push_back("rho: does not equal the rotational difference");
        if (c.rho < 1) bad.push_back("rho: must be >= 1");
        // boundary-attaining pairs (h(y) = +-1 at y = +-L1) certify to a
        // box straddling the band edge by its own width; tolerate that
        for (const FixedPointCert* fp : {&c.c0, &c.c1})
            if (!(Interval(-c.L1 - 1e-6, c.L1 + 1e-6).contains(fp->box.y)))
                bad.push_back("fixed_points: a certified box leaves the L1 band");
    }
    int expect_c = c.rho == 1 ? 3 : (c.rho == 2 ? 2 : 1);
    if (c.rho >= 1 && c.c_coeff != expect_c) bad.push_back("c_coeff: wrong value for rho");

    double redo_bound = F.vertical_displacement_bound(c.L2);
    if (redo_bound > c.NL2_bound)
        bad.push_back("NL2_bound: recomputed bound exceeds the stored one");

    if (c.has_inequality) {
        if (!c.ineq_lhs.contains(c.L2)) bad.push_back("inequality.lhs: does not enclose L2");
        Interval rhs = Interval(c.L1) +
                       Interval(static_cast<double>(c.c_coeff)) * Interval(c.NL2_bound);
        if (!rhs.subset_of(c.ineq_rhs))
            bad.push_back("inequality.rhs: stored enclosure does not contain the recomputation");
        if (!(c.ineq_lhs.lo() >= c.ineq_rhs.hi()))
            bad.push_back("inequality: L2 >= L1 + c*NL2 fails on the stored intervals");
    }

    if (c.has_crossing) {
        if (c.crossing.direction != Direction::Forward)
            bad.push_back("crossing: orbit must be forward");
        recheck_orbit(F, c.crossing, "crossing.orbit", bad);
        auto step_ok = [&](int k, Side side) {
            return k >= 0 && k < static_cast<int>(c.crossing.boxes.size()) &&
                   crossing_holds(c.crossing.boxes[static_cast<std::size_t>(k)], c.L2, side);
        };
        if (!step_ok(c.below_step, Side::Below))
            bad.push_back("crossing.below_step: box not entirely below -L2");
        if (!step_ok(c.above_step, Side::Above))
            bad.push_back("crossing.above_step: box not entirely above +L2");
    }

    if (c.assumption.empty()) bad.push_back("assumption: missing nonwandering dichotomy note");
    bool complete = c.has_fixed_points && c.has_inequality && c.has_crossing;
    if (c.verdict == "certified" && !complete)
        bad.push_back("verdict: certified but stages are missing");
    return bad;
}

} // namespace

std::vector<std::string> recheck(const ordered_json& cert)
{
    int version;
    std::string pipeline;
    try {
        version = cert.at("schema_version").get<int>();
        pipeline = cert.at("pipeline").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaMismatch(std::string("missing schema fields: ") + e.what());
    }
    if (version != kSchemaVersion)
        throw SchemaMismatch("unsupported schema_version " + std::to_string(version));
    try {
        if (pipeline == "dissipative") return recheck_dissipative(dissipative_from_json(cert));
        if (pipeline == "hamiltonian") return recheck_hamiltonian(hamiltonian_from_json(cert));
    } catch (const SchemaMismatch&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaMismatch(std::string("malformed certificate: ") + e.what());
    } catch (const Error& e) {
        // un-reconstructible family parameters are a content failure, not a
        // schema failure
        return {std::string("family: ") + e.what()};
    }
    throw SchemaMismatch("unknown pipeline: " + pipeline);
}

} // namespace horseshoe
