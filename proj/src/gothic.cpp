// Copyright 2026 The gcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcs/gothic.hpp"

#include <algorithm>
#include <cmath>

namespace gcs {

namespace {

void check_domain(Scalar a, Scalar b, Scalar d, const Tolerance& tol) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(d)))
        throw NonFiniteInput("gothic parameters must be finite");
    if (a <= tol.eps_abs || b <= tol.eps_abs)
        throw DomainError("gothic radii must be positive");
    if (d < 0) throw DomainError("center distance cannot be negative");
    if (d >= a + b) throw DomainError("circles too far apart: no curvilinear triangle");
    if (d > tol.eps_abs && d <= std::abs(a - b) + tol.eps_abs)
        throw DomainError("one arc engulfs the other: no curvilinear triangle");
}

}  // namespace

GothicSolution gothic_oracle(Scalar a, Scalar b, Scalar d, const Tolerance& tol) {
    check_domain(a, b, d, tol);
    const Scalar scale = std::max({a, b, d});

    std::vector<Scalar> roots;
    if (std::abs(a - b) <= tol.eps_rel * scale) {
        // Equal radii: the quadratic degenerates to a linear equation.
        roots.push_back((a * a - d * d / 4) / (2 * a));
    } else {
        // x = (K - 2 rho (a-b)) / (2d), K = d^2 + a^2 - b^2; substituting in
        // x^2 = a^2 - 2 a rho gives  A rho^2 + B rho + C = 0 with
        const Scalar K = d * d + a * a - b * b;
        const Scalar delta = a - b;
        const Scalar qa = delta * delta;
        const Scalar qb = 2 * d * d * a - K * delta;
        const Scalar qc = K * K / 4 - d * d * a * a;
        const Scalar disc = qb * qb - 4 * qa * qc;
        if (disc < 0) throw NoInscribedCircle("tangency system has no real solution");
        const Scalar sq = std::sqrt(disc);
        // Stable quadratic: compute the large-magnitude root first.
        const Scalar q = -0.5 * (qb + (qb >= 0 ? sq : -sq));
        if (qa != 0) {
            roots.push_back(q / qa);
        }
        if (q != 0) roots.push_back(qc / q);
    }

    std::vector<Scalar> admissible;
    for (Scalar rho : roots)
        if (rho > tol.eps_abs && rho < std::min(a, b) + tol.eps_abs)
            admissible.push_back(rho);
    if (admissible.empty()) throw NoInscribedCircle("no admissible inscribed radius");
    const Scalar rho = *std::min_element(admissible.begin(), admissible.end());

    Scalar x;
    if (d <= tol.eps_abs) {
        x = 0;  // semicircle: the center sits straight above A
    } else {
        x = (d * d + a * a - b * b - 2 * rho * (a - b)) / (2 * d);
    }

    // Residuals of both tangency equations must vanish.
    const Scalar res1 = x * x - (a * a - 2 * a * rho);
    const Scalar res2 = (d - x) * (d - x) - (b * b - 2 * b * rho);
    const Scalar bound = 1e-12 * std::max<Scalar>(1, scale * scale);
    if (std::abs(res1) > bound * 1e3 || std::abs(res2) > bound * 1e3)
        throw NoInscribedCircle("tangency residuals too large");

    return {x, rho};
}

GothicFigure make_gothic_figure(Point a, Point b, Scalar radius_a, Scalar radius_b,
                                const Tolerance& tol) {
    const Scalar d = distance(a, b);
    check_domain(radius_a, radius_b, d, tol);
    const GothicSolution sol = gothic_oracle(radius_a, radius_b, d, tol);

    GothicFigure fig;
    fig.a_center = a;
    fig.b_center = b;
    fig.radius_a = radius_a;
    fig.radius_b = radius_b;
    fig.base_length = d;

    Point u{1, 0}, n{0, 1};
    if (d > tol.eps_abs) {
        u = unit(b - a, tol);
        n = perp(u);
    }

    if (d <= tol.eps_abs) {
        fig.apex = a + radius_a * n;
    } else {
        const auto hits = intersect(Circle{a, radius_a}, Circle{b, radius_b}, tol);
        if (hits.empty()) throw DegenerateFigure("arcs do not meet in an apex");
        fig.apex = hits.back();
        for (const Point& p : hits)
            if (cross(b - a, p - a) > cross(b - a, fig.apex - a)) fig.apex = p;
    }

    fig.tangency_on_base = a + sol.x * u;
    fig.inscribed = Circle{fig.tangency_on_base + sol.rho * n, sol.rho};
    return fig;
}

// ---------------------------------------------------------------------------
// Compass construction (equal radii)

namespace {

struct GothicArgs {
    std::string a_id;
    std::string b_id;
    Scalar radius;
};

GothicArgs gothic_args(const Step& call, StepBuilder& b) {
    std::vector<std::string> ids;
    Scalar radius = -1;
    for (const MacroArg& arg : call.macro_args) {
        if (arg.kind == MacroArg::Kind::ident) ids.push_back(arg.ident);
        else if (arg.key == "r" && arg.kind == MacroArg::Kind::number) radius = arg.number;
    }
    if (ids.size() != 2 || radius <= 0)
        throw StepFailure(call.id,
                          "gothic_inscribe expects two points and a positive r=");
    (void)b;
    return {ids[0], ids[1], radius};
}

// Expansion of gothic_inscribe(A, B, r). Every step is compass or
// straightedge work: the r= argument only places the given radius mark G on
// line AB, after which the inscribed radius
//     rho = (a - m)(a + m) / (2a),  m = |A D0|,
// is cut off on the perpendicular at A by the similar-triangle layout and
// carried to the tangency point D0.
void expand_gothic(const Step& call, StepBuilder& b) {
    const GothicArgs args = gothic_args(call, b);
    const Tolerance& tol = b.tolerance();
    const Point a = b.point_at(args.a_id);
    const Point bp = b.point_at(args.b_id);
    const Scalar d = distance(a, bp);
    const Scalar r = args.radius;

    if (d <= tol.eps_abs)
        throw DegenerateFigure("gothic_inscribe needs distinct base points");
    if (d >= 2 * r - tol.eps_abs)
        throw DegenerateFigure("base too long: the equal arcs no longer meet");

    const Point u = unit(bp - a, tol);
    const std::string& mid = b.macro_id();

    // Given data: the radius mark on line AB.
    const std::string g = b.free_point(b.fresh("G"), a + r * u);
    const std::string base = b.line(b.fresh("base"), args.a_id, args.b_id);
    const std::string circle_a = b.circle(b.fresh("cA"), args.a_id, g);

    // Same radius at B via the parallelogram transfer.
    const std::string d0 = b.midpoint(mid + "_D0", args.a_id, args.b_id);
    const std::string gb = b.reflect(b.fresh("GB"), d0, g);
    const std::string circle_b = b.circle(b.fresh("cB"), args.b_id, gb);

    // Apex of the curvilinear triangle, above AB.
    b.intersect_left_of(mid + "_C", circle_a, circle_b, a, bp);

    // Length marks on line AB: H at -m, G2 at 2a (m = |A D0| = d/2).
    const std::string h = b.reflect(b.fresh("H"), args.a_id, d0);
    const std::string g2 = b.reflect(b.fresh("G2"), g, args.a_id);

    // Similar-triangle layout at A: p = |A G2| = 2a on line AB,
    // q = |D0 G| = a-m on the perpendicular, r' = |H G| = a+m on line AB.
    const std::string perp_a = b.perpendicular_at(b.fresh("perpA"), base, args.a_id);
    const std::string rp_v = b.radius_point(b.fresh("rpV"), args.a_id, d0, g);
    const std::string cv = b.circle(b.fresh("cV"), args.a_id, rp_v);
    const std::string v = b.intersect_left_of(b.fresh("V"), cv, perp_a, a, bp);
    const std::string rp_w = b.radius_point(b.fresh("rpW"), args.a_id, h, g);
    const std::string cw = b.circle(b.fresh("cW"), args.a_id, rp_w);
    const std::string w = b.intersect_toward(b.fresh("W"), cw, base, a, bp);

    // Parallel to (G2 V) through W cuts rho = q*r'/p off the perpendicular.
    const std::string par_m = b.midpoint(b.fresh("parM"), g2, w);
    const std::string par_r = b.reflect(b.fresh("parR"), par_m, v);
    const std::string par = b.line(b.fresh("par"), w, par_r);
    const std::string t = b.intersect(b.fresh("T"), par, perp_a, 0);

    // Carry rho to D0 and intersect with the perpendicular there.
    const std::string mt = b.midpoint(b.fresh("mT"), args.a_id, d0);
    const std::string xd = b.reflect(b.fresh("Xd"), mt, t);
    const std::string perp_d0 = b.perpendicular_at(b.fresh("perpD0"), base, d0);
    const std::string cx = b.circle(b.fresh("cX"), d0, xd);
    const std::string x = b.intersect_left_of(mid + "_X", cx, perp_d0, a, bp);

    // The inscribed circle, drawn through its tangency point.
    b.circle(mid, x, d0);
}

}  // namespace

GothicConstruction gothic_inscribe(Point a, Point b, Scalar radius, const Tolerance& tol) {
    const Scalar d = distance(a, b);
    if (d <= tol.eps_abs)
        throw DegenerateFigure("gothic_inscribe needs distinct base points");
    if (d >= 2 * radius - tol.eps_abs)
        throw DegenerateFigure("base too long: the equal arcs no longer meet");

    ConstructionProgram p;
    p.name = "gothic_inscribe";
    Step pa;
    pa.id = "A";
    pa.rule = StepRule::free_point;
    pa.coords = a;
    Step pb;
    pb.id = "B";
    pb.rule = StepRule::free_point;
    pb.coords = b;
    Step call;
    call.id = "G";
    call.rule = StepRule::macro_call;
    call.macro_name = "gothic_inscribe";
    call.macro_result = ObjectKind::circle;
    MacroArg arg_a;
    arg_a.kind = MacroArg::Kind::ident;
    arg_a.ident = "A";
    MacroArg arg_b;
    arg_b.kind = MacroArg::Kind::ident;
    arg_b.ident = "B";
    MacroArg arg_r;
    arg_r.kind = MacroArg::Kind::number;
    arg_r.key = "r";
    arg_r.number = radius;
    call.macro_args = {arg_a, arg_b, arg_r};
    p.steps = {pa, pb, call};

    GothicConstruction out;
    out.expanded = expand_macros(p, tol);
    out.trace = evaluate(out.expanded, tol);

    out.figure.a_center = a;
    out.figure.b_center = b;
    out.figure.radius_a = radius;
    out.figure.radius_b = radius;
    out.figure.base_length = d;
    out.figure.apex = std::get<Point>(out.trace.at("G_C"));
    out.figure.inscribed = std::get<Circle>(out.trace.at("G"));
    out.figure.tangency_on_base = std::get<Point>(out.trace.at("G_D0"));
    return out;
}

GothicConstruction gothic_inscribe(const GothicFigure& figure, const Tolerance& tol) {
    if (std::abs(figure.radius_a - figure.radius_b) > tol.eps_abs)
        throw UnequalRadii("the compass construction covers equal radii only; "
                           "use the closed-form solution for unequal arcs");
    return gothic_inscribe(figure.a_center, figure.b_center, figure.radius_a, tol);
}

std::vector<GothicFamilyEntry> gothic_family(Scalar a, const std::vector<Scalar>& d_values,
                                             const Tolerance& tol) {
    if (!(std::isfinite(a)) || a <= tol.eps_abs)
        throw DomainError("family radius must be positive");
    std::vector<GothicFamilyEntry> out;
    out.reserve(d_values.size());
    for (Scalar d : d_values) {
        if (!std::isfinite(d) || d < 0 || d >= 2 * a)
            throw DomainError("family distance must lie in [0, 2a)");
        out.push_back({d, d / 2, (a * a - d * d / 4) / (2 * a)});
    }
    return out;
}

void register_gothic_macros(MacroRegistry& registry) {
    registry.add("gothic_inscribe", ObjectKind::circle, expand_gothic);
}

}  // namespace gcs
