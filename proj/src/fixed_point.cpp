#include "horseshoe/fixed_point.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

namespace horseshoe {

namespace {

std::string hex_pair(const Interval& x)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "[%a,%a]", x.lo(), x.hi());
    return buf;
}

Interval two_pi() { return Interval(2.0) * pi_interval(); }

// G(z) = F(z) - z - (p,0); zeros are fixed points with rotation p
void eval_G(const MapFamily& F, const IBox& B, int p, Interval& gx, Interval& gy)
{
    IBox img = F.eval_lift(B);
    gx = img.x - B.x - Interval(static_cast<double>(p));
    gy = img.y - B.y;
}

// rotation integer from the pr1 displacement enclosure over B
int infer_rotation(const MapFamily& F, const IBox& B, std::optional<int> hint)
{
    Interval d = F.eval_lift(B).x - B.x;
    if (d.width() >= 1.0)
        throw AmbiguousRotation("pr1 displacement enclosure has width >= 1: " + hex_pair(d));
    double c = std::ceil(d.lo()), f = std::floor(d.hi());
    if (c > f) throw AmbiguousRotation("pr1 displacement enclosure contains no integer");
    if (c != f) throw AmbiguousRotation("pr1 displacement enclosure spans two integers");
    int p = static_cast<int>(c);
    if (hint && *hint != p)
        throw AmbiguousRotation("rotation hint disagrees with displacement enclosure");
    return p;
}

struct D2 { double a11, a12, a21, a22; };

bool invert(const D2& m, D2& inv)
{
    double det = m.a11 * m.a22 - m.a12 * m.a21;
    if (!std::isfinite(det) || std::fabs(det) < 1e-13) return false;
    inv = {m.a22 / det, -m.a12 / det, -m.a21 / det, m.a11 / det};
    return true;
}

// double-precision Newton polish of the fixed-point system (front end
// only; everything rigorous happens on the polished point)
bool polish(const MapFamily& F, double& x, double& y, int p)
{
    for (int it = 0; it < 60; ++it) {
        double X, Y;
        F.eval_pt(x, y, X, Y);
        double gx = X - x - p, gy = Y - y;
        if (std::fabs(gx) < 1e-14 && std::fabs(gy) < 1e-14) return true;
        IMatrix2 J = F.jacobian(IBox(Interval(x), Interval(y)));
        D2 dg{J.a11.mid() - 1.0, J.a12.mid(), J.a21.mid(), J.a22.mid() - 1.0}, inv;
        if (!invert(dg, inv)) return false;
        double dx = inv.a11 * gx + inv.a12 * gy;
        double dy = inv.a21 * gx + inv.a22 * gy;
        x -= dx;
        y -= dy;
        if (!std::isfinite(x) || !std::isfinite(y)) return false;
    }
    return false;
}

// Krawczyk image K(B) of the fixed-point system, or nullopt when the
// midpoint Jacobian cannot be inverted
std::optional<IBox> krawczyk_image(const MapFamily& F, const IBox& B, int p)
{
    IBox m{Interval(B.x.mid()), Interval(B.y.mid())};

    Interval gx, gy;
    eval_G(F, m, p, gx, gy);

    IMatrix2 J = F.jacobian(B);
    IMatrix2 A; // DG over B
    A.a11 = J.a11 - Interval(1.0);
    A.a12 = J.a12;
    A.a21 = J.a21;
    A.a22 = J.a22 - Interval(1.0);

    D2 mid{A.a11.mid(), A.a12.mid(), A.a21.mid(), A.a22.mid()}, Yd;
    if (!invert(mid, Yd)) return std::nullopt;
    Interval y11(Yd.a11), y12(Yd.a12), y21(Yd.a21), y22(Yd.a22);

    // E = I - Y*A
    Interval e11 = Interval(1.0) - (y11 * A.a11 + y12 * A.a21);
    Interval e12 = -(y11 * A.a12 + y12 * A.a22);
    Interval e21 = -(y21 * A.a11 + y22 * A.a21);
    Interval e22 = Interval(1.0) - (y21 * A.a12 + y22 * A.a22);

    Interval dx = B.x - m.x, dy = B.y - m.y;
    Interval kx = m.x - (y11 * gx + y12 * gy) + (e11 * dx + e12 * dy);
    Interval ky = m.y - (y21 * gx + y22 * gy) + (e21 * dx + e22 * dy);
    return IBox(kx, ky);
}

std::optional<FixedPointCert> try_krawczyk(const MapFamily& F, double cx, double cy,
                                           double r, int p)
{
    IBox B(Interval(cx - r, cx + r), Interval(cy - r, cy + r));
    auto K = krawczyk_image(F, B, p);
    if (!K || !K->strict_subset_of(B)) return std::nullopt;

    // store a slightly inflated box so the inclusion K(box) within box can
    // be replayed from the stored endpoints alone (the raw contracted box
    // is boundary-tight and outward rounding would spill over)
    IBox boxed = K->inflated(0.25 * std::max(K->width(), 4e-15));
    auto K2 = krawczyk_image(F, boxed, p);
    if (!K2 || !K2->subset_of(boxed)) return std::nullopt;

    FixedPointCert cert;
    cert.box = boxed;
    cert.rotation = p;
    cert.family = family_id(F);
    cert.method = "krawczyk";
    cert.newton_radius_ratio =
        std::max(K->x.width() / B.x.width(), K->y.width() / B.y.width());
    cert.existence_only = false;
    return cert;
}

// 1-D interval Newton contraction around a polished root of fn with
// derivative dfn; returns the contracted enclosure
std::optional<Interval> newton_1d(const std::function<Interval(const Interval&)>& fn,
                                  const std::function<Interval(const Interval&)>& dfn,
                                  double root, double r)
{
    Interval X(root - r, root + r);
    Interval d = dfn(X);
    if (d.contains_zero()) return std::nullopt;
    Interval N = Interval(root) - fn(Interval(root)) / d;
    if (!N.strict_subset_of(X)) return std::nullopt;
    // as with Krawczyk, inflate so the contraction replays from the stored
    // endpoints under outward rounding
    double pad = 0.25 * std::max(N.width(), 4e-15);
    Interval S(N.lo() - pad, N.hi() + pad);
    Interval dS = dfn(S);
    if (dS.contains_zero()) return N;
    Interval NS = Interval(S.mid()) - fn(Interval(S.mid())) / dS;
    if (NS.subset_of(S)) return S;
    return N;
}

std::optional<FixedPointCert> try_tangential(const MapFamily& F, double cx, double cy, int p)
{
    const Interval tp = two_pi();

    // x-equation: v(sin(2*pi*x)) = 0, unique zero by interval Newton
    auto g = [&](const Interval& X) { return F.v(sin(tp * X)); };
    auto dg = [&](const Interval& X) { return F.dv(sin(tp * X)) * (tp * cos(tp * X)); };
    double x = cx;
    for (int it = 0; it < 60; ++it) {
        double gv = g(Interval(x)).mid(), dv = dg(Interval(x)).mid();
        if (std::fabs(dv) < 1e-13) return std::nullopt;
        double nx = x - gv / dv;
        if (!std::isfinite(nx)) return std::nullopt;
        if (std::fabs(nx - x) < 1e-15) { x = nx; break; }
        x = nx;
    }
    std::optional<Interval> Xc;
    double ratio = 1.0;
    for (double r : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3}) {
        if (auto N = newton_1d(g, dg, x, r)) {
            Xc = N;
            ratio = N->width() / (2 * r);
            break;
        }
    }
    if (!Xc) return std::nullopt;

    // y-equation: h(y) = p attained at a critical height; certify the
    // critical point of h by interval Newton on h'
    ExprPtr dh = F.h()->derivative();
    ExprPtr d2h = dh->derivative();
    auto hp = [&](const Interval& Y) { return dh->eval(Y); };
    auto hpp = [&](const Interval& Y) { return d2h->eval(Y); };
    double y = cy;
    for (int it = 0; it < 60; ++it) {
        double hv = hp(Interval(y)).mid(), h2 = hpp(Interval(y)).mid();
        if (std::fabs(h2) < 1e-13) return std::nullopt;
        double ny = y - hv / h2;
        if (!std::isfinite(ny)) return std::nullopt;
        if (std::fabs(ny - y) < 1e-15) { y = ny; break; }
        y = ny;
    }
    std::optional<Interval> Yc;
    for (double r : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3}) {
        if (auto N = newton_1d(hp, hpp, y, r)) {
            Yc = N;
            break;
        }
    }
    if (!Yc) return std::nullopt;
    if (!F.h()->eval(*Yc).contains(static_cast<double>(p))) return std::nullopt;

    FixedPointCert cert;
    cert.box = IBox(*Xc, *Yc);
    cert.rotation = p;
    cert.family = family_id(F);
    cert.method = "tangential";
    cert.newton_radius_ratio = ratio;
    cert.existence_only = true;
    return cert;
}

} // namespace

std::string family_id(const MapFamily& F)
{
    if (F.type() == MapFamily::Type::Dissipative)
        return "dissipative a=" + hex_pair(F.a()) + " b=" + hex_pair(F.b());
    return "generalized h=" + F.h()->to_string() + " w=" + F.w()->to_string() +
           " mean=" + hex_pair(F.mean());
}

FixedPointCert certify_fixed_point(const MapFamily& F, const IBox& seed,
                                   std::optional<int> p_hint)
{
    if (!seed.is_finite()) throw NonFiniteError("certify_fixed_point: non-finite seed");
    int p = p_hint ? *p_hint : infer_rotation(F, seed, std::nullopt);

    double x = seed.x.mid(), y = seed.y.mid();
    bool polished = polish(F, x, y, p);
    if (!polished) { x = seed.x.mid(); y = seed.y.mid(); }

    bool singular_everywhere = true;
    for (double r : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3}) {
        IMatrix2 J = F.jacobian(IBox(Interval(x - r, x + r), Interval(y - r, y + r)));
        D2 mid{J.a11.mid() - 1.0, J.a12.mid(), J.a21.mid(), J.a22.mid() - 1.0}, inv;
        if (invert(mid, inv)) singular_everywhere = false;
        if (auto cert = try_krawczyk(F, x, y, r, p)) {
            // rotation invariant re-checked on the certified box
            Interval d = F.eval_lift(cert->box).x - cert->box.x;
            if (d.width() < 1.0 && d.contains(static_cast<double>(p))) return *cert;
        }
    }

    if (F.type() == MapFamily::Type::Generalized) {
        if (auto cert = try_tangential(F, x, y, p)) return *cert;
    }

    if (singular_everywhere)
        throw SingularJacobian("fixed-point system Jacobian numerically singular near seed");
    throw NoContraction("Krawczyk inclusion failed at all trial radii");
}

bool recheck_fixed_point(const MapFamily& F, const FixedPointCert& c)
{
    if (c.family != family_id(F)) return false;
    if (!c.box.is_finite()) return false;

    // rotation displacement must isolate the stored integer
    Interval d = F.eval_lift(c.box).x - c.box.x;
    if (!(d.width() < 1.0) || !d.contains(static_cast<double>(c.rotation))) return false;

    if (c.method == "krawczyk") {
        auto K = krawczyk_image(F, c.box, c.rotation);
        return K && K->subset_of(c.box);
    }
    if (c.method == "tangential") {
        if (F.type() != MapFamily::Type::Generalized) return false;
        const Interval tp = two_pi();
        Interval X = c.box.x, Y = c.box.y;
        Interval dg = F.dv(sin(tp * X)) * (tp * cos(tp * X));
        if (dg.contains_zero()) return false;
        Interval g0 = F.v(sin(tp * Interval(X.mid())));
        if (!(Interval(X.mid()) - g0 / dg).subset_of(X)) return false;
        ExprPtr dh = F.h()->derivative();
        Interval hpp = dh->derivative()->eval(Y);
        if (hpp.contains_zero()) return false;
        Interval hp0 = dh->eval(Interval(Y.mid()));
        if (!(Interval(Y.mid()) - hp0 / hpp).subset_of(Y)) return false;
        return F.h()->eval(Y).contains(static_cast<double>(c.rotation));
    }
    return false;
}

int rotational_difference(const FixedPointCert& c0, const FixedPointCert& c1)
{
    if (c0.family != c1.family)
        throw FamilyMismatch("certificates come from different families");
    return c1.rotation - c0.rotation;
}

} // namespace horseshoe
