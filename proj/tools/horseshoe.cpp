// Command-line front end: certification runs, certificate rechecking,
// parameter sweeps, iterate dumps for figures, and topology queries.
//
// Exit codes are a contract: 0 success/certified, 1 failed certification
// or violated recheck/lemma, 2 configuration or input error, 3 internal.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "horseshoe/certify.hpp"
#include "horseshoe/lemma_suite.hpp"

using nlohmann::ordered_json;
using namespace horseshoe;

namespace {

// temp + rename so readers never observe a half-written file
void write_atomic(const std::string& path, const std::string& data)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << data;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

ordered_json load_json(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return ordered_json::parse(in);
}

// ----------------------------------------------------------------- certify

void apply_config(const ordered_json& j, DissipativeConfig& cfg)
{
    for (const auto& [key, val] : j.items()) {
        if (key == "a") cfg.a = Interval(val.get<double>());
        else if (key == "b") cfg.b = Interval(val.get<double>());
        else if (key == "b_level") cfg.b_level = val.get<double>();
        else if (key == "epsilon") cfg.epsilon = val.get<double>();
        else if (key == "N") cfg.N_override = val.get<int>();
        else if (key == "free_curve_slices") cfg.free_curve_slices = val.get<int>();
        else if (key == "ring_seeds") cfg.ring_seeds = val.get<int>();
        else if (key == "max_backward") cfg.max_backward = val.get<int>();
        else if (key == "power") cfg.power = val.get<int>();
        else throw std::runtime_error("unknown config key: " + key);
    }
}

void apply_config(const ordered_json& j, HamiltonianConfig& cfg)
{
    for (const auto& [key, val] : j.items()) {
        if (key == "h") cfg.h = val.get<std::string>();
        else if (key == "w") cfg.w = val.get<std::string>();
        else if (key == "L1") cfg.L1 = val.get<double>();
        else if (key == "L2") cfg.L2 = val.get<double>();
        else if (key == "mean_slices") cfg.mean_slices = val.get<int>();
        else if (key == "seed_grid") cfg.seed_grid = val.get<int>();
        else if (key == "max_iter") cfg.max_iter = val.get<int>();
        else if (key == "power") cfg.power = val.get<int>();
        else throw std::runtime_error("unknown config key: " + key);
    }
}

template <class Cert>
int finish_certify(const Cert& cert, const std::string& out)
{
    if (!out.empty()) write_atomic(out, to_json(cert).dump(2) + "\n");
    std::cout << "verdict: " << cert.verdict << "\n";
    if (cert.verdict == "certified") return 0;
    return 1;
}

// --------------------------------------------------------------- iterates

struct SeedSpec {
    std::vector<std::vector<double>> boxes;    // x0 x1 y0 y1
    std::vector<double> circles;               // y = const
    std::vector<std::vector<double>> segments; // x0 y0 x1 y1
};

using PointsD = std::vector<std::pair<double, double>>;

struct Layer {
    // per step: closed boundary polygons (box seeds) and point clouds
    std::vector<PointsD> polygons;
    std::vector<PointsD> clouds;
    bool crossed = false;
};

std::vector<Layer> run_iterates(const MapFamily& F, const SeedSpec& seeds, int steps,
                                bool backward, double level)
{
    std::vector<Layer> layers(static_cast<std::size_t>(steps) + 1);
    auto advance = [&](double& x, double& y) {
        double X, Y;
        if (backward)
            F.eval_pt_inverse(x, y, X, Y);
        else
            F.eval_pt(x, y, X, Y);
        x = X;
        y = Y;
    };

    // a box region is tracked through its boundary polygon: the image of
    // the region under a homeomorphism is bounded by the boundary's image
    const int per_side = 128;
    for (const auto& b : seeds.boxes) {
        PointsD pts;
        for (int i = 0; i < per_side; ++i) {
            double t = static_cast<double>(i) / per_side;
            pts.emplace_back(b[0] + t * (b[1] - b[0]), b[2]);
        }
        for (int i = 0; i < per_side; ++i) {
            double t = static_cast<double>(i) / per_side;
            pts.emplace_back(b[1], b[2] + t * (b[3] - b[2]));
        }
        for (int i = 0; i < per_side; ++i) {
            double t = static_cast<double>(i) / per_side;
            pts.emplace_back(b[1] - t * (b[1] - b[0]), b[3]);
        }
        for (int i = 0; i < per_side; ++i) {
            double t = static_cast<double>(i) / per_side;
            pts.emplace_back(b[0], b[3] - t * (b[3] - b[2]));
        }
        for (int k = 0; k <= steps; ++k) {
            layers[static_cast<std::size_t>(k)].polygons.push_back(pts);
            for (auto& [x, y] : pts) advance(x, y);
        }
    }

    const int cloud = 512;
    auto run_cloud = [&](PointsD pts) {
        for (int k = 0; k <= steps; ++k) {
            layers[static_cast<std::size_t>(k)].clouds.push_back(pts);
            for (auto& [x, y] : pts) advance(x, y);
        }
    };
    for (double y : seeds.circles) {
        PointsD pts;
        for (int i = 0; i < cloud; ++i) pts.emplace_back(static_cast<double>(i) / cloud, y);
        run_cloud(std::move(pts));
    }
    for (const auto& s : seeds.segments) {
        PointsD pts;
        for (int i = 0; i <= cloud; ++i) {
            double t = static_cast<double>(i) / cloud;
            pts.emplace_back(s[0] + t * (s[2] - s[0]), s[1] + t * (s[3] - s[1]));
        }
        run_cloud(std::move(pts));
    }

    // color switch: first step where the geometry leaves the +-level band
    bool crossed = false;
    for (auto& L : layers) {
        if (!crossed) {
            for (const auto* group : {&L.polygons, &L.clouds})
                for (const PointsD& pts : *group)
                    for (const auto& [x, y] : pts) {
                        (void)x;
                        if (std::fabs(y) > level) crossed = true;
                    }
        }
        L.crossed = crossed;
    }
    return layers;
}

std::string layers_csv(const std::vector<Layer>& layers)
{
    std::ostringstream os;
    os << "step,kind,crossed,x,y\n";
    os.precision(17);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const Layer& L = layers[k];
        for (const PointsD& pts : L.polygons)
            for (const auto& [x, y] : pts)
                os << k << ",boundary," << (L.crossed ? 1 : 0) << "," << x << "," << y << "\n";
        for (const PointsD& pts : L.clouds)
            for (const auto& [x, y] : pts)
                os << k << ",point," << (L.crossed ? 1 : 0) << "," << x << "," << y << "\n";
    }
    return os.str();
}

std::string layers_svg(const std::vector<Layer>& layers, double level)
{
    double xlo = 0, xhi = 1, ylo = -1, yhi = 1;
    for (const Layer& L : layers)
        for (const auto* group : {&L.polygons, &L.clouds})
            for (const PointsD& pts : *group)
                for (const auto& [x, y] : pts) {
                    xlo = std::min(xlo, x);
                    xhi = std::max(xhi, x);
                    ylo = std::min(ylo, y);
                    yhi = std::max(yhi, y);
                }
    const double scale = 60.0, pad = 20.0;
    double W = (xhi - xlo) * scale + 2 * pad, H = (yhi - ylo) * scale + 2 * pad;
    auto px = [&](double x) { return pad + (x - xlo) * scale; };
    auto py = [&](double y) { return pad + (yhi - y) * scale; }; // y up

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
       << "' viewBox='0 0 " << W << " " << H << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    // period-1 gridlines of the covering plane
    for (long gx = static_cast<long>(std::floor(xlo)); gx <= static_cast<long>(std::ceil(xhi)); ++gx)
        os << "<line x1='" << px(static_cast<double>(gx)) << "' y1='" << py(ylo) << "' x2='"
           << px(static_cast<double>(gx)) << "' y2='" << py(yhi)
           << "' stroke='#cccccc' stroke-width='0.5'/>\n";
    for (double gy : {-level, 0.0, level})
        os << "<line x1='" << px(xlo) << "' y1='" << py(gy) << "' x2='" << px(xhi) << "' y2='"
           << py(gy) << "' stroke='#999999' stroke-dasharray='4 2' stroke-width='0.5'/>\n";

    for (std::size_t k = 0; k < layers.size(); ++k) {
        const Layer& L = layers[k];
        const char* color = L.crossed ? "#d62728" : "#1f77b4";
        os << "<g id='step-" << k << "' fill='none' stroke='" << color << "'>\n";
        for (const PointsD& pts : L.polygons) {
            os << "  <polygon points='";
            for (const auto& [x, y] : pts) os << px(x) << "," << py(y) << " ";
            os << "'/>\n";
        }
        for (const PointsD& pts : L.clouds)
            for (const auto& [x, y] : pts)
                os << "  <circle cx='" << px(x) << "' cy='" << py(y) << "' r='0.8' fill='"
                   << color << "' stroke='none'/>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// --------------------------------------------------------------- topology

Rational rat(const ordered_json& v)
{
    if (v.is_number_integer()) return Rational(v.get<long>());
    return Rational(v.get<std::string>());
}

// {"closed": bool, "vertices": [["x","y"], ...]} or a bare vertex array
Polyline load_polyline(const ordered_json& j)
{
    Polyline p;
    const ordered_json* verts = &j;
    if (j.is_object()) {
        p.closed = j.value("closed", false);
        verts = &j.at("vertices");
    }
    for (const auto& v : *verts) p.vertices.push_back({rat(v.at(0)), rat(v.at(1))});
    return p;
}

Rectangle4 load_rectangle(const ordered_json& j)
{
    Rectangle4 r;
    r.a = load_polyline(j.at("a"));
    r.Iplus = load_polyline(j.at("I+"));
    r.b = load_polyline(j.at("b"));
    r.Iminus = load_polyline(j.at("I-"));
    return r;
}

Banner load_banner(const ordered_json& j)
{
    Banner b;
    b.rect = load_rectangle(j.at("rect"));
    b.A = load_polyline(j.at("A"));
    b.B = load_polyline(j.at("B"));
    b.validate();
    return b;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rigorous rotational-horseshoe certifier and topology toolkit"};
    // long-only help so that --h stays available as an expression flag
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // ---- certify
    auto* certify = app.add_subcommand("certify", "run a certification pipeline");
    certify->require_subcommand(1);
    std::string out_path, config_path;
    int power = 1;
    int threads = 0;

    auto* cd = certify->add_subcommand("dissipative", "standard family pipeline");
    DissipativeConfig dcfg;
    double d_a = 3.0, d_b = 0.8;
    auto* aopt = cd->add_option("--a", d_a, "parameter a");
    auto* bopt = cd->add_option("--b", d_b, "parameter b, in (0,1)");
    cd->add_option("--b-level", dcfg.b_level, "band level b");
    cd->add_option("--epsilon", dcfg.epsilon, "neighborhood shrink epsilon");
    int n_override = 0;
    auto* nopt = cd->add_option("--N", n_override, "override the step count N");
    cd->add_option("--slices", dcfg.free_curve_slices, "free-curve slice budget");
    cd->add_option("--seeds", dcfg.ring_seeds, "witness shooting seeds");
    cd->add_option("--max-backward", dcfg.max_backward, "backward search budget");
    cd->add_option("--power", power, "certify this power of the map");
    cd->add_option("--out", out_path, "certificate output path");
    cd->add_option("--config", config_path, "JSON config file");
    cd->add_option("--threads", threads, "worker cap (library layers)");

    auto* ch = certify->add_subcommand("hamiltonian", "generalized family pipeline");
    HamiltonianConfig hcfg;
    ch->add_option("--h", hcfg.h, "expression h(y)");
    ch->add_option("--w", hcfg.w, "expression w(x)");
    ch->add_option("--L1", hcfg.L1, "inner band level");
    ch->add_option("--L2", hcfg.L2, "outer band level");
    ch->add_option("--mean-slices", hcfg.mean_slices, "quadrature slices");
    ch->add_option("--seed-grid", hcfg.seed_grid, "crossing seed grid");
    ch->add_option("--max-iter", hcfg.max_iter, "forward search budget");
    ch->add_option("--power", power, "certify this power of the map");
    ch->add_option("--out", out_path, "certificate output path");
    ch->add_option("--config", config_path, "JSON config file");
    ch->add_option("--threads", threads, "worker cap (library layers)");

    // ---- recheck
    auto* recheck_cmd = app.add_subcommand("recheck", "audit a stored certificate");
    std::string cert_path;
    recheck_cmd->add_option("cert", cert_path, "certificate JSON")->required();

    // ---- sweep
    auto* sweep = app.add_subcommand("sweep", "grid of certification runs");
    sweep->require_subcommand(1);
    auto* sd = sweep->add_subcommand("dissipative", "b-grid sweep at fixed a");
    double s_a = 3.0, s_bmin = 0.2, s_bmax = 0.8, s_bstep = 0.1;
    std::string sweep_out;
    sd->add_option("--a", s_a, "parameter a");
    sd->add_option("--b-min", s_bmin, "grid start");
    sd->add_option("--b-max", s_bmax, "grid end (inclusive up to rounding)");
    sd->add_option("--b-step", s_bstep, "grid step, > 0");
    sd->add_option("--out", sweep_out, "CSV output path");
    sd->add_option("--threads", threads, "parallel cells cap");
    auto* sh = sweep->add_subcommand("hamiltonian", "recipe-file sweep");
    std::string recipe_path;
    sh->add_option("--recipe", recipe_path, "JSON array of {h,w,L1,L2,...}")->required();
    sh->add_option("--out", sweep_out, "CSV output path");
    sh->add_option("--threads", threads, "parallel cells cap");

    // ---- iterates
    auto* iter = app.add_subcommand("iterates", "dump per-step enclosures / clouds");
    std::string i_family = "dissipative", i_h = "y", i_w = "x", i_format = "csv", i_out;
    double i_a = 3.0, i_b = 0.8, i_level = 6.0;
    int i_steps = 0;
    bool i_backward = false;
    std::vector<std::vector<double>> i_boxes, i_segments;
    std::vector<double> i_circles;
    iter->add_option("--family", i_family, "dissipative|hamiltonian")
        ->check(CLI::IsMember({"dissipative", "hamiltonian"}));
    iter->add_option("--a", i_a, "parameter a");
    iter->add_option("--b", i_b, "parameter b");
    iter->add_option("--h", i_h, "expression h(y)");
    iter->add_option("--w", i_w, "expression w(x)");
    iter->add_option("--power", power, "iterate this power of the map");
    iter->add_option("--box", i_boxes, "seed box: x0 x1 y0 y1")->expected(4)->take_all();
    iter->add_option("--circle", i_circles, "seed circle y = const");
    iter->add_option("--segment", i_segments, "seed segment: x0 y0 x1 y1")
        ->expected(4)
        ->take_all();
    iter->add_option("--steps", i_steps, "iterate count")->check(CLI::NonNegativeNumber);
    iter->add_flag("--backward", i_backward, "iterate the inverse");
    iter->add_option("--level", i_level, "band level for the color switch");
    iter->add_option("--format", i_format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));
    iter->add_option("--out", i_out, "output path (stdout if omitted)");

    // ---- topology
    auto* topo = app.add_subcommand("topology", "exact invariant queries");
    topo->require_subcommand(1);
    std::string f1, f2, f3, sep_side = "upper", sep_x;
    auto* t_theta = topo->add_subcommand("theta", "crossing number of two arcs");
    t_theta->add_option("A", f1)->required();
    t_theta->add_option("B", f2)->required();
    auto* t_nu = topo->add_subcommand("nu", "lift offset of first/last visit");
    t_nu->add_option("A", f1)->required();
    t_nu->add_option("K", f2)->required();
    auto* t_mu = topo->add_subcommand("mu", "qualifying offset spread");
    t_mu->add_option("R", f1, "rectangle JSON {a, I+, b, I-}")->required();
    t_mu->add_option("C", f2)->required();
    auto* t_sep = topo->add_subcommand("sep", "barrier crossing count");
    t_sep->add_option("A", f1)->required();
    t_sep->add_option("gamma", f2)->required();
    t_sep->add_option("--x", sep_x, "base point 'x,y' (rationals); default: A's first vertex");
    t_sep->add_option("--side", sep_side, "upper|lower")
        ->check(CLI::IsMember({"upper", "lower"}));
    auto* t_hd = topo->add_subcommand("hdiff", "homotopic difference of two banners");
    t_hd->add_option("b1", f1)->required();
    t_hd->add_option("b2", f2)->required();
    auto* t_lemma = topo->add_subcommand("lemma_suite", "randomized invariant checks");
    std::uint64_t l_seed = 20260823ull;
    long long l_count = 1000;
    t_lemma->add_option("--seed", l_seed, "RNG seed");
    t_lemma->add_option("--count", l_count, "instances per check");
    t_lemma->add_option("--threads", threads, "worker cap");
    (void)f3;

    CLI11_PARSE(app, argc, argv);

    if (threads > 0) {
#ifdef _WIN32
        _putenv_s("HORSESHOE_THREADS", std::to_string(threads).c_str());
#else
        setenv("HORSESHOE_THREADS", std::to_string(threads).c_str(), 1);
#endif
    }

    try {
        if (cd->parsed()) {
            try {
                if (!config_path.empty()) apply_config(load_json(config_path), dcfg);
                if (*aopt || config_path.empty()) dcfg.a = Interval(d_a);
                if (*bopt || config_path.empty()) dcfg.b = Interval(d_b);
                if (*nopt) dcfg.N_override = n_override;
                if (power != 1) dcfg.power = power;
                if (!(dcfg.b.lo() > 0.0 && dcfg.b.hi() < 1.0))
                    throw DomainError("b must lie in (0,1)");
                if (dcfg.power < 1) throw DomainError("power must be >= 1");
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
            return finish_certify(certify_dissipative(dcfg), out_path);
        }
        if (ch->parsed()) {
            try {
                if (!config_path.empty()) apply_config(load_json(config_path), hcfg);
                if (power != 1) hcfg.power = power;
                if (!(hcfg.L1 > 0.0 && hcfg.L2 > hcfg.L1))
                    throw DomainError("need 0 < L1 < L2");
                if (hcfg.power < 1) throw DomainError("power must be >= 1");
                (void)parse_expr(hcfg.h); // surface syntax errors as config errors
                (void)parse_expr(hcfg.w);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
            return finish_certify(certify_hamiltonian(hcfg), out_path);
        }

        if (recheck_cmd->parsed()) {
            ordered_json cert;
            try {
                cert = load_json(cert_path);
            } catch (const std::exception& e) {
                std::cerr << "cannot load certificate: " << e.what() << "\n";
                return 2;
            }
            try {
                std::vector<std::string> bad = recheck(cert);
                if (bad.empty()) {
                    std::cout << "certificate checks out\n";
                    return 0;
                }
                for (const std::string& m : bad) std::cout << "violated: " << m << "\n";
                return 1;
            } catch (const SchemaMismatch& e) {
                std::cerr << "schema mismatch: " << e.what() << "\n";
                return 2;
            }
        }

        if (sd->parsed()) {
            if (!(s_bstep > 0.0)) {
                std::cerr << "grid error: b-step must be positive\n";
                return 2;
            }
            std::vector<DissipativeConfig> grid;
            for (double b = s_bmin; b <= s_bmax + 1e-12; b += s_bstep) {
                DissipativeConfig c;
                c.a = Interval(s_a);
                c.b = Interval(b);
                grid.push_back(c);
            }
            SweepResult res = sweep_dissipative(grid, threads);
            if (sweep_out.empty())
                std::cout << res.csv();
            else
                write_atomic(sweep_out, res.csv());
            return 0;
        }
        if (sh->parsed()) {
            std::vector<HamiltonianConfig> grid;
            try {
                ordered_json recipe = load_json(recipe_path);
                if (!recipe.is_array()) throw std::runtime_error("recipe must be a JSON array");
                for (const auto& cell : recipe) {
                    HamiltonianConfig c;
                    apply_config(cell, c);
                    grid.push_back(c);
                }
            } catch (const std::exception& e) {
                std::cerr << "grid error: " << e.what() << "\n";
                return 2;
            }
            SweepResult res = sweep_hamiltonian(grid, threads);
            if (sweep_out.empty())
                std::cout << res.csv();
            else
                write_atomic(sweep_out, res.csv());
            return 0;
        }

        if (iter->parsed()) {
            SeedSpec seeds;
            try {
                for (const auto& b : i_boxes) {
                    if (!(b[0] <= b[1] && b[2] <= b[3]))
                        throw DomainError("box must satisfy x0 <= x1, y0 <= y1");
                    seeds.boxes.push_back(b);
                }
                seeds.circles = i_circles;
                seeds.segments = i_segments;
                if (seeds.boxes.empty() && seeds.circles.empty() && seeds.segments.empty())
                    throw DomainError("no seeds given (--box/--circle/--segment)");
            } catch (const std::exception& e) {
                std::cerr << "seed error: " << e.what() << "\n";
                return 2;
            }
            MapFamily F = i_family == "dissipative"
                              ? MapFamily::dissipative(Interval(i_a), Interval(i_b))
                              : MapFamily::generalized(parse_expr(i_h), parse_expr(i_w));
            if (power > 1) F = F.powered(power);
            std::vector<Layer> layers = run_iterates(F, seeds, i_steps, i_backward, i_level);
            std::string payload = i_format == "svg" ? layers_svg(layers, i_level)
                                                    : layers_csv(layers);
            if (i_out.empty())
                std::cout << payload;
            else
                write_atomic(i_out, payload);
            return 0;
        }

        if (topo->parsed()) {
            try {
                if (t_theta->parsed()) {
                    std::cout << theta(load_polyline(load_json(f1)), load_polyline(load_json(f2)))
                              << "\n";
                } else if (t_nu->parsed()) {
                    std::cout << nu(load_polyline(load_json(f1)), load_polyline(load_json(f2)))
                              << "\n";
                } else if (t_mu->parsed()) {
                    std::cout << mu(load_rectangle(load_json(f1)), load_polyline(load_json(f2)))
                              << "\n";
                } else if (t_sep->parsed()) {
                    Polyline A = load_polyline(load_json(f1));
                    Polyline g = load_polyline(load_json(f2));
                    RPoint x = A.vertices.at(0);
                    if (!sep_x.empty()) {
                        auto comma = sep_x.find(',');
                        if (comma == std::string::npos)
                            throw std::runtime_error("--x wants 'x,y'");
                        x = RPoint{Rational(sep_x.substr(0, comma)),
                                   Rational(sep_x.substr(comma + 1))};
                    }
                    SepSide side = sep_side == "upper" ? SepSide::Upper : SepSide::Lower;
                    std::cout << sep(x, A, g, side) << "\n";
                } else if (t_hd->parsed()) {
                    std::cout << homotopic_difference(load_banner(load_json(f1)),
                                                      load_banner(load_json(f2)))
                              << "\n";
                } else if (t_lemma->parsed()) {
                    int nt = threads > 0 ? threads : default_thread_count();
                    bool ok = true;
                    for (const LemmaReport& r : check_all(l_seed, l_count, nt)) {
                        std::cout << format_report(r) << "\n";
                        ok = ok && r.violations == 0 && r.mismatches == 0;
                    }
                    return ok ? 0 : 1;
                }
                return 0;
            } catch (const Error& e) {
                std::cerr << "geometry error: " << e.what() << "\n";
                return 2;
            } catch (const std::exception& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return 2;
            }
        }

        std::cerr << "no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
