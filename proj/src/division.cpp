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

#include "gcs/division.hpp"

#include <numeric>

namespace gcs {

RatioSpec RatioSpec::of(std::vector<long long> parts) {
    if (parts.size() < 2)
        throw DegenerateInput("a ratio needs at least two parts");
    for (long long p : parts)
        if (p < 1) throw DegenerateInput("ratio parts must be at least 1");
    return RatioSpec{std::move(parts)};
}

long long RatioSpec::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

std::vector<Scalar> RatioSpec::fractions() const {
    const Scalar n = static_cast<Scalar>(total());
    std::vector<Scalar> out;
    long long running = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        running += parts[i];
        out.push_back(static_cast<Scalar>(running) / n);
    }
    return out;
}

namespace {

RatioSpec ratio_from_args(const Step& call) {
    for (const MacroArg& a : call.macro_args)
        if (a.kind == MacroArg::Kind::ratio) return RatioSpec::of(a.ratio);
    throw StepFailure(call.id, "macro '" + call.macro_name + "' needs a ratio argument");
}

std::pair<std::string, std::string> endpoint_ids(const Step& call) {
    std::vector<std::string> ids;
    for (const MacroArg& a : call.macro_args)
        if (a.kind == MacroArg::Kind::ident) ids.push_back(a.ident);
    if (ids.size() != 2)
        throw StepFailure(call.id, "macro '" + call.macro_name +
                                       "' expects two endpoint ids");
    return {ids[0], ids[1]};
}

std::optional<Scalar> keyword_number(const Step& call, const std::string& key) {
    for (const MacroArg& a : call.macro_args)
        if (a.key == key &&
            (a.kind == MacroArg::Kind::number || a.kind == MacroArg::Kind::angle_deg))
            return a.number;
    return std::nullopt;
}

std::string export_name(const std::string& macro_id, std::size_t k) {
    // First division point is the macro's principal result.
    return k == 0 ? macro_id : macro_id + "_" + std::to_string(k + 1);
}

// Marks at 1r, 2r, ..., n*r from `origin_id` along `ray_id`, made by walking
// the compass: each circle is centered on the last mark through the one
// before it. `first_mark` must already sit at distance r on the ray.
std::vector<std::string> compass_marks(StepBuilder& b, const std::string& origin_id,
                                       const std::string& ray_id,
                                       const std::string& first_mark, long long n) {
    std::vector<std::string> marks = {first_mark};
    std::string prev2 = origin_id;
    for (long long k = 1; k < n; ++k) {
        const std::string& prev = marks.back();
        const std::string c = b.circle(b.fresh("step_c"), prev, prev2);
        const std::string next =
            b.intersect_excluding(b.fresh("mark"), c, ray_id, b.point_at(prev2));
        prev2 = prev;
        marks.push_back(next);
    }
    return marks;
}

void expand_divide_thales(const Step& call, StepBuilder& b) {
    const auto [a_id, b_id] = endpoint_ids(call);
    const RatioSpec ratio = ratio_from_args(call);
    const Point a = b.point_at(a_id);
    const Point bp = b.point_at(b_id);
    if (points_equal(a, bp, b.tolerance()))
        throw DegenerateSegment("cannot divide a zero-length segment");

    const long long n = ratio.total();

    // Transversal ray at 60 degrees to AB; the direction is an arbitrary
    // choice but fixed for determinism.
    const std::string aux =
        b.free_point(b.fresh("aux"), a + rotated(bp - a, kPi / 3));
    const std::string ray_id = b.ray(b.fresh("ray"), a_id, aux);
    const std::string base = b.line(b.fresh("base"), a_id, b_id);

    // Compass marks at |AB|, 2|AB|, ... along the transversal.
    const std::string c0 = b.circle(b.fresh("unit_c"), a_id, b_id);
    const std::string m1 = b.intersect(b.fresh("mark"), c0, ray_id, 0);
    const auto marks = compass_marks(b, a_id, ray_id, m1, n);

    const std::string& last = marks.back();
    long long running = 0;
    for (std::size_t k = 0; k + 1 < ratio.parts.size(); ++k) {
        running += ratio.parts[k];
        const std::string& mark = marks[static_cast<std::size_t>(running - 1)];
        // Parallel to (last mark -> B) through this mark, by central symmetry.
        const std::string mid = b.midpoint(b.fresh("par_m"), last, mark);
        const std::string refl = b.reflect(b.fresh("par_r"), mid, b_id);
        const std::string par = b.line(b.fresh("par"), mark, refl);
        b.intersect(export_name(b.macro_id(), k), par, base, 0);
    }
}

void expand_divide_circles(const Step& call, StepBuilder& b) {
    const auto [a_id, b_id] = endpoint_ids(call);
    const RatioSpec ratio = ratio_from_args(call);
    const Point a = b.point_at(a_id);
    const Point bp = b.point_at(b_id);
    const Tolerance& tol = b.tolerance();
    if (points_equal(a, bp, tol))
        throw DegenerateSegment("cannot divide a zero-length segment");

    const long long n = ratio.total();
    const Scalar seg_len = distance(a, bp);
    const Scalar custom = keyword_number(call, "r").value_or(0);
    const Scalar step_r = custom > 0 ? custom : seg_len;
    if (2 * static_cast<Scalar>(n) * step_r < seg_len - tol.eps_abs)
        throw StepRadiusTooSmall("step radius too small: the largest circle cannot "
                                 "reach across the segment");

    const std::string base = b.line(b.fresh("base"), a_id, b_id);
    const std::string along = b.ray(b.fresh("along"), a_id, b_id);
    const std::string pbis = b.perpendicular_bisector(b.fresh("pbis"), a_id, b_id);

    // Walk marks r, 2r, ..., nr out along AB to get the outer radius.
    std::string first_len_mark;
    if (custom > 0) {
        first_len_mark = b.free_point(b.fresh("rmark"), a + step_r * unit(bp - a, tol));
    } else {
        first_len_mark = b_id;
    }
    const auto len_marks = compass_marks(b, a_id, along, first_len_mark, n);

    // Outer center: on the perpendicular bisector, at n*r from A, above AB.
    const std::string outer_arc = b.circle(b.fresh("outer_arc"), a_id, len_marks.back());
    const std::string outer_center =
        b.intersect_left_of(b.fresh("O"), outer_arc, pbis, a, bp);

    // Centers at r, 2r, ... along the ray toward the outer center; each
    // family circle passes through the shared tangency point A.
    const std::string center_ray = b.ray(b.fresh("cray"), a_id, outer_center);
    const std::string small = b.circle(b.fresh("c1arc"), a_id, first_len_mark);
    const std::string n1 = b.intersect(b.fresh("ctr"), small, center_ray, 0);
    const auto centers = compass_marks(b, a_id, center_ray, n1, n);

    std::vector<std::string> family;
    for (const auto& c : centers)
        family.push_back(b.circle(b.fresh("fam"), c, a_id));

    long long running = 0;
    for (std::size_t k = 0; k + 1 < ratio.parts.size(); ++k) {
        running += ratio.parts[k];
        const std::string& ring = family[static_cast<std::size_t>(running - 1)];
        b.intersect_excluding(export_name(b.macro_id(), k), ring, base, a);
    }
}

ConstructionProgram division_program(const char* macro_name, Point a, Point b,
                                     const RatioSpec& ratio, Scalar step_radius) {
    ConstructionProgram p;
    p.name = macro_name;

    Step pa;
    pa.id = "A";
    pa.rule = StepRule::free_point;
    pa.coords = a;
    Step pb;
    pb.id = "B";
    pb.rule = StepRule::free_point;
    pb.coords = b;

    Step call;
    call.id = "D";
    call.rule = StepRule::macro_call;
    call.macro_name = macro_name;
    call.macro_result = ObjectKind::point;
    MacroArg arg_a;
    arg_a.kind = MacroArg::Kind::ident;
    arg_a.ident = "A";
    MacroArg arg_b;
    arg_b.kind = MacroArg::Kind::ident;
    arg_b.ident = "B";
    MacroArg arg_ratio;
    arg_ratio.kind = MacroArg::Kind::ratio;
    arg_ratio.ratio = ratio.parts;
    call.macro_args = {arg_a, arg_b, arg_ratio};
    if (step_radius > 0) {
        MacroArg arg_r;
        arg_r.kind = MacroArg::Kind::number;
        arg_r.key = "r";
        arg_r.number = step_radius;
        call.macro_args.push_back(arg_r);
    }

    p.steps = {pa, pb, call};
    return p;
}

std::vector<Point> collect_division_points(const Trace& t, const RatioSpec& ratio) {
    std::vector<Point> pts;
    for (std::size_t k = 0; k + 1 < ratio.parts.size(); ++k)
        pts.push_back(std::get<Point>(t.at(export_name("D", k))));
    return pts;
}

}  // namespace

DivisionResult divide_thales(Point a, Point b, const RatioSpec& ratio, const Tolerance& tol) {
    RatioSpec checked = RatioSpec::of(ratio.parts);
    if (points_equal(a, b, tol))
        throw DegenerateSegment("cannot divide a zero-length segment");
    DivisionResult out;
    out.expanded = expand_macros(division_program("divide_thales", a, b, checked, 0), tol);
    out.trace = evaluate(out.expanded, tol);
    out.points = collect_division_points(out.trace, checked);
    return out;
}

TangentCircleDivision divide_tangent_circles(Point a, Point b, const RatioSpec& ratio,
                                             Scalar step_radius, const Tolerance& tol) {
    RatioSpec checked = RatioSpec::of(ratio.parts);
    if (points_equal(a, b, tol))
        throw DegenerateSegment("cannot divide a zero-length segment");

    TangentCircleDivision out;
    out.expanded =
        expand_macros(division_program("divide_circles", a, b, checked, step_radius), tol);
    out.trace = evaluate(out.expanded, tol);
    out.points = collect_division_points(out.trace, checked);

    // Recover the family from the expanded trace.
    const Scalar r = step_radius > 0 ? step_radius : distance(a, b);
    out.family.tangency = a;
    out.family.step_radius = r;
    for (const auto& [id, obj] : out.trace.objects) {
        if (id.find("__fam") != std::string::npos)
            out.family.circles.push_back(std::get<Circle>(obj));
    }
    out.outer_center = out.family.circles.back().center;
    out.family.center_ray = make_ray(a, out.outer_center, tol);
    return out;
}

std::vector<Point> interpolation_oracle(Point a, Point b, const RatioSpec& ratio,
                                        const Tolerance& tol) {
    RatioSpec checked = RatioSpec::of(ratio.parts);
    if (points_equal(a, b, tol))
        throw DegenerateSegment("cannot divide a zero-length segment");
    std::vector<Point> out;
    for (Scalar f : checked.fractions()) out.push_back(a + f * (b - a));
    return out;
}

void register_division_macros(MacroRegistry& registry) {
    registry.add("divide_thales", ObjectKind::point, expand_divide_thales);
    registry.add("divide_circles", ObjectKind::point, expand_divide_circles);
}

}  // namespace gcs
