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

#include "gcs/construction.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace gcs {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Small helpers

bool Step::operator==(const Step& o) const {
    return id == o.id && rule == o.rule && inputs == o.inputs &&
           coords.x == o.coords.x && coords.y == o.coords.y && radius == o.radius &&
           branch == o.branch && macro_name == o.macro_name && macro_args == o.macro_args &&
           macro_result == o.macro_result && solved == o.solved;
}

bool structurally_equal(const ConstructionProgram& a, const ConstructionProgram& b) {
    return a.steps == b.steps;
}

ObjectKind kind_of(const Object& o) {
    if (std::holds_alternative<Point>(o)) return ObjectKind::point;
    if (std::holds_alternative<Line>(o)) return ObjectKind::line;
    if (std::holds_alternative<Ray>(o)) return ObjectKind::ray;
    return ObjectKind::circle;
}

const char* kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::point: return "point";
        case ObjectKind::line: return "line";
        case ObjectKind::ray: return "ray";
        case ObjectKind::circle: return "circle";
    }
    return "?";
}

const char* step_class_name(StepClass c) {
    switch (c) {
        case StepClass::compass: return "compass";
        case StepClass::straightedge: return "straightedge";
        case StepClass::macro_op: return "macro";
        case StepClass::numeric: return "numeric";
    }
    return "?";
}

StepClass classify(const Step& step) {
    if (step.solved) return StepClass::numeric;
    switch (step.rule) {
        case StepRule::macro_call:
            return StepClass::macro_op;
        case StepRule::circle_center_radius:
            // A bare numeric radius is data, not a constructed magnitude.
            return StepClass::numeric;
        case StepRule::circle_center_point:
        case StepRule::midpoint:
        case StepRule::perpendicular_at:
        case StepRule::perpendicular_bisector:
            return StepClass::compass;
        case StepRule::free_point:
        case StepRule::line_through:
        case StepRule::ray_from:
        case StepRule::intersect:
            return StepClass::straightedge;
    }
    return StepClass::straightedge;
}

bool Trace::contains(const std::string& id) const {
    return std::any_of(objects.begin(), objects.end(),
                       [&](const auto& e) { return e.first == id; });
}

const Object& Trace::at(const std::string& id) const {
    for (const auto& [oid, obj] : objects)
        if (oid == id) return obj;
    throw Error("trace has no object '" + id + "'");
}

bool Trace::pure_compass_straightedge() const {
    return std::all_of(classes.begin(), classes.end(), [](const auto& e) {
        return e.second == StepClass::compass || e.second == StepClass::straightedge;
    });
}

namespace {

bool objects_identical(const Object& a, const Object& b) {
    if (kind_of(a) != kind_of(b)) return false;
    auto same = [](Point p, Point q) { return p.x == q.x && p.y == q.y; };
    switch (kind_of(a)) {
        case ObjectKind::point:
            return same(std::get<Point>(a), std::get<Point>(b));
        case ObjectKind::line:
            return same(std::get<Line>(a).anchor, std::get<Line>(b).anchor) &&
                   same(std::get<Line>(a).direction, std::get<Line>(b).direction);
        case ObjectKind::ray:
            return same(std::get<Ray>(a).origin, std::get<Ray>(b).origin) &&
                   same(std::get<Ray>(a).direction, std::get<Ray>(b).direction);
        case ObjectKind::circle:
            return same(std::get<Circle>(a).center, std::get<Circle>(b).center) &&
                   std::get<Circle>(a).radius == std::get<Circle>(b).radius;
    }
    return false;
}

}  // namespace

bool traces_equal(const Trace& a, const Trace& b) {
    if (a.program_name != b.program_name) return false;
    if (a.classes != b.classes) return false;
    if (a.objects.size() != b.objects.size()) return false;
    for (std::size_t i = 0; i < a.objects.size(); ++i) {
        if (a.objects[i].first != b.objects[i].first) return false;
        if (!objects_identical(a.objects[i].second, b.objects[i].second)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Macro registry

void MacroRegistry::add(const std::string& name, ObjectKind result, MacroExpander fn) {
    entries_[name] = Entry{result, std::move(fn)};
}

bool MacroRegistry::has(const std::string& name) const { return entries_.count(name) > 0; }

const MacroExpander& MacroRegistry::expander(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UnknownMacro(name, "unknown macro '" + name + "'");
    return it->second.fn;
}

ObjectKind MacroRegistry::result_kind(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UnknownMacro(name, "unknown macro '" + name + "'");
    return it->second.result;
}

// ---------------------------------------------------------------------------
// Scope

bool ObjectScope::contains(const std::string& id) const { return index_.count(id) > 0; }

const Object& ObjectScope::at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error("unknown object id '" + id + "'");
    return ordered_[it->second].second;
}

void ObjectScope::bind(const std::string& id, Object obj) {
    if (contains(id)) throw ValidationError(id, "duplicate id '" + id + "'");
    index_.emplace(id, ordered_.size());
    ordered_.emplace_back(id, std::move(obj));
}

// ---------------------------------------------------------------------------
// Primitive evaluation

namespace {

struct ArityInfo {
    int inputs;
    const char* name;
};

ArityInfo arity_of(StepRule rule) {
    switch (rule) {
        case StepRule::free_point: return {0, "free point"};
        case StepRule::line_through: return {2, "line"};
        case StepRule::ray_from: return {2, "ray"};
        case StepRule::circle_center_point: return {2, "circle"};
        case StepRule::circle_center_radius: return {1, "circle"};
        case StepRule::intersect: return {2, "intersect"};
        case StepRule::midpoint: return {2, "midpoint"};
        case StepRule::perpendicular_at: return {2, "perp"};
        case StepRule::perpendicular_bisector: return {2, "bisector"};
        case StepRule::macro_call: return {-1, "macro"};
    }
    return {0, "?"};
}

Point as_point(const Object& o, const std::string& step_id) {
    if (const auto* p = std::get_if<Point>(&o)) return *p;
    throw ValidationError(step_id, "step '" + step_id + "' expects a point input");
}

// Intersection candidates of two drawn objects, sorted lexicographically.
// Ray inputs restrict the supporting line's hits to the forward side.
std::vector<Point> intersection_candidates(const Object& a, const Object& b,
                                           const std::string& step_id,
                                           const Tolerance& tol) {
    auto on_ray = [&](const Ray& r, Point p) {
        return dot(p - r.origin, r.direction) >= -tol.eps_abs;
    };
    auto as_line = [](const Object& o) -> std::optional<Line> {
        if (const auto* l = std::get_if<Line>(&o)) return *l;
        if (const auto* r = std::get_if<Ray>(&o)) return Line{r->origin, r->direction};
        return std::nullopt;
    };

    const auto* ca = std::get_if<Circle>(&a);
    const auto* cb = std::get_if<Circle>(&b);
    const auto la = as_line(a);
    const auto lb = as_line(b);

    std::vector<Point> pts;
    if (ca && cb) {
        pts = intersect(*ca, *cb, tol);
    } else if (la && cb) {
        pts = intersect(*la, *cb, tol);
    } else if (ca && lb) {
        pts = intersect(*lb, *ca, tol);
    } else if (la && lb) {
        pts = {intersect(*la, *lb, tol)};
    } else {
        throw ValidationError(step_id,
                              "step '" + step_id + "' cannot intersect a point object");
    }

    auto keep = [&](Point p) {
        if (const auto* r = std::get_if<Ray>(&a); r && !on_ray(*r, p)) return false;
        if (const auto* r = std::get_if<Ray>(&b); r && !on_ray(*r, p)) return false;
        return true;
    };
    std::vector<Point> filtered;
    for (Point p : pts)
        if (keep(p)) filtered.push_back(p);
    return filtered;
}

Object evaluate_primitive(const Step& step, const ObjectScope& scope, const Tolerance& tol) {
    auto input = [&](std::size_t i) -> const Object& { return scope.at(step.inputs[i]); };
    auto pt = [&](std::size_t i) { return as_point(input(i), step.id); };

    try {
        switch (step.rule) {
            case StepRule::free_point:
                if (!std::isfinite(step.coords.x) || !std::isfinite(step.coords.y))
                    throw NonFiniteInput("free point coordinates");
                return step.coords;
            case StepRule::line_through:
                return make_line(pt(0), pt(1), tol);
            case StepRule::ray_from:
                return make_ray(pt(0), pt(1), tol);
            case StepRule::circle_center_point:
                return make_circle(pt(0), distance(pt(0), pt(1)), tol);
            case StepRule::circle_center_radius:
                return make_circle(pt(0), step.radius, tol);
            case StepRule::midpoint:
                return Point{0.5 * (pt(0).x + pt(1).x), 0.5 * (pt(0).y + pt(1).y)};
            case StepRule::perpendicular_at: {
                const auto* l = std::get_if<Line>(&input(0));
                if (!l)
                    throw ValidationError(step.id,
                                          "perp expects a line as first input");
                return Line{pt(1), perp(l->direction)};
            }
            case StepRule::perpendicular_bisector: {
                const Point a = pt(0), b = pt(1);
                if (points_equal(a, b, tol))
                    throw DegenerateInput("bisector of coincident points");
                return Line{0.5 * (a + b), unit(perp(b - a), tol)};
            }
            case StepRule::intersect: {
                auto pts = intersection_candidates(input(0), input(1), step.id, tol);
                if (step.branch < 0 || static_cast<std::size_t>(step.branch) >= pts.size())
                    throw BranchUnavailable(
                        step.id, "step '" + step.id + "': intersection branch " +
                                     std::to_string(step.branch) + " unavailable (" +
                                     std::to_string(pts.size()) + " point(s))");
                return pts[static_cast<std::size_t>(step.branch)];
            }
            case StepRule::macro_call:
                break;
        }
    } catch (const BranchUnavailable&) {
        throw;
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw StepFailure(step.id, "step '" + step.id + "' failed: " + e.what());
    }
    throw ValidationError(step.id, "macro step reached primitive evaluation");
}

}  // namespace

// ---------------------------------------------------------------------------
// StepBuilder

StepBuilder::StepBuilder(ObjectScope& scope, std::string macro_id, Tolerance tol)
    : scope_(scope), macro_id_(std::move(macro_id)), tol_(tol) {}

std::string StepBuilder::fresh(const std::string& hint) {
    std::string id;
    do {
        id = macro_id_ + "__" + hint + std::to_string(counter_++);
    } while (scope_.contains(id));
    return id;
}

Point StepBuilder::point_at(const std::string& id) const {
    return as_point(scope_.at(id), id);
}

std::string StepBuilder::emit(Step step) {
    Object obj = evaluate_primitive(step, scope_, tol_);
    scope_.bind(step.id, std::move(obj));
    steps_.push_back(std::move(step));
    return steps_.back().id;
}

std::string StepBuilder::free_point(const std::string& id, Point p, bool solved) {
    Step s;
    s.id = id;
    s.rule = StepRule::free_point;
    s.coords = p;
    s.solved = solved;
    return emit(std::move(s));
}

std::string StepBuilder::line(const std::string& id, const std::string& a,
                              const std::string& b) {
    Step s;
    s.id = id;
    s.rule = StepRule::line_through;
    s.inputs = {a, b};
    return emit(std::move(s));
}

std::string StepBuilder::ray(const std::string& id, const std::string& origin,
                             const std::string& through) {
    Step s;
    s.id = id;
    s.rule = StepRule::ray_from;
    s.inputs = {origin, through};
    return emit(std::move(s));
}

std::string StepBuilder::circle(const std::string& id, const std::string& center,
                                const std::string& through) {
    Step s;
    s.id = id;
    s.rule = StepRule::circle_center_point;
    s.inputs = {center, through};
    return emit(std::move(s));
}

std::string StepBuilder::circle_with_radius(const std::string& id, const std::string& center,
                                            Scalar radius, bool solved) {
    Step s;
    s.id = id;
    s.rule = StepRule::circle_center_radius;
    s.inputs = {center};
    s.radius = radius;
    s.solved = solved;
    return emit(std::move(s));
}

std::string StepBuilder::midpoint(const std::string& id, const std::string& a,
                                  const std::string& b) {
    Step s;
    s.id = id;
    s.rule = StepRule::midpoint;
    s.inputs = {a, b};
    return emit(std::move(s));
}

std::string StepBuilder::perpendicular_at(const std::string& id, const std::string& line_id,
                                          const std::string& point_id) {
    Step s;
    s.id = id;
    s.rule = StepRule::perpendicular_at;
    s.inputs = {line_id, point_id};
    return emit(std::move(s));
}

std::string StepBuilder::perpendicular_bisector(const std::string& id, const std::string& a,
                                                const std::string& b) {
    Step s;
    s.id = id;
    s.rule = StepRule::perpendicular_bisector;
    s.inputs = {a, b};
    return emit(std::move(s));
}

std::string StepBuilder::intersect(const std::string& id, const std::string& a,
                                   const std::string& b, int branch) {
    Step s;
    s.id = id;
    s.rule = StepRule::intersect;
    s.inputs = {a, b};
    s.branch = branch;
    return emit(std::move(s));
}

namespace {

std::vector<Point> builder_candidates(const ObjectScope& scope, const std::string& step_id,
                                      const std::string& a, const std::string& b,
                                      const Tolerance& tol) {
    return intersection_candidates(scope.at(a), scope.at(b), step_id, tol);
}

}  // namespace

std::string StepBuilder::intersect_excluding(const std::string& id, const std::string& a,
                                             const std::string& b, Point excluded) {
    auto pts = builder_candidates(scope_, id, a, b, tol_);
    int best = -1;
    Scalar best_dist = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Scalar d = distance(pts[i], excluded);
        if (d > best_dist) {
            best_dist = d;
            best = static_cast<int>(i);
        }
    }
    if (best < 0 || best_dist <= tol_.eps_abs)
        throw BranchUnavailable(id, "step '" + id +
                                        "': no intersection distinct from the excluded point");
    return intersect(id, a, b, best);
}

std::string StepBuilder::intersect_left_of(const std::string& id, const std::string& a,
                                           const std::string& b, Point from, Point to) {
    auto pts = builder_candidates(scope_, id, a, b, tol_);
    if (pts.empty())
        throw BranchUnavailable(id, "step '" + id + "': objects do not intersect");
    int best = 0;
    Scalar best_side = cross(to - from, pts[0] - from);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Scalar side = cross(to - from, pts[i] - from);
        if (side > best_side) {
            best_side = side;
            best = static_cast<int>(i);
        }
    }
    return intersect(id, a, b, best);
}

std::string StepBuilder::intersect_toward(const std::string& id, const std::string& a,
                                          const std::string& b, Point from, Point toward) {
    auto pts = builder_candidates(scope_, id, a, b, tol_);
    if (pts.empty())
        throw BranchUnavailable(id, "step '" + id + "': objects do not intersect");
    int best = 0;
    Scalar best_dot = dot(toward - from, pts[0] - from);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Scalar d = dot(toward - from, pts[i] - from);
        if (d > best_dot) {
            best_dot = d;
            best = static_cast<int>(i);
        }
    }
    return intersect(id, a, b, best);
}

std::string StepBuilder::reflect(const std::string& id, const std::string& center,
                                 const std::string& point) {
    const Point p = point_at(point);
    const std::string arc = circle(fresh("refl_c"), center, point);
    const std::string axis = line(fresh("refl_l"), point, center);
    return intersect_excluding(id, arc, axis, p);
}

std::string StepBuilder::radius_point(const std::string& id, const std::string& center,
                                      const std::string& p, const std::string& q) {
    const Point c = point_at(center);
    const Point pp = point_at(p);
    const Point qq = point_at(q);
    if (points_equal(pp, c, tol_)) return q;  // length already hangs off the center
    if (points_equal(qq, c, tol_)) return p;
    // Parallelogram transfer: reflect q through the midpoint of p and the
    // center; the image sits at distance |pq| from the center.
    const std::string mid = midpoint(fresh("xfer_m"), p, center);
    return reflect(id, mid, q);
}

// ---------------------------------------------------------------------------
// Validation

void validate(const ConstructionProgram& p) {
    std::set<std::string> seen;
    std::map<std::string, ObjectKind> kinds;

    auto result_kind_of = [&](const Step& s) -> ObjectKind {
        switch (s.rule) {
            case StepRule::free_point:
            case StepRule::intersect:
            case StepRule::midpoint:
                return ObjectKind::point;
            case StepRule::line_through:
            case StepRule::perpendicular_at:
            case StepRule::perpendicular_bisector:
                return ObjectKind::line;
            case StepRule::ray_from:
                return ObjectKind::ray;
            case StepRule::circle_center_point:
            case StepRule::circle_center_radius:
                return ObjectKind::circle;
            case StepRule::macro_call:
                return s.macro_result;
        }
        return ObjectKind::point;
    };

    for (const Step& s : p.steps) {
        if (s.id.empty()) throw ValidationError(s.id, "step with empty id");
        if (!seen.insert(s.id).second)
            throw ValidationError(s.id, "duplicate id '" + s.id + "'");

        const ArityInfo arity = arity_of(s.rule);
        if (arity.inputs >= 0 && static_cast<int>(s.inputs.size()) != arity.inputs)
            throw ValidationError(s.id, "step '" + s.id + "': " + arity.name + " expects " +
                                            std::to_string(arity.inputs) + " input(s), got " +
                                            std::to_string(s.inputs.size()));

        for (const std::string& in : s.inputs)
            if (!seen.count(in))
                throw ValidationError(s.id, "step '" + s.id + "' references unknown id '" +
                                                in + "'");

        auto expect = [&](std::size_t i, ObjectKind k) {
            if (kinds.at(s.inputs[i]) != k)
                throw ValidationError(s.id, "step '" + s.id + "': input '" + s.inputs[i] +
                                                "' must be a " + kind_name(k));
        };
        switch (s.rule) {
            case StepRule::line_through:
            case StepRule::ray_from:
            case StepRule::circle_center_point:
            case StepRule::midpoint:
            case StepRule::perpendicular_bisector:
                expect(0, ObjectKind::point);
                expect(1, ObjectKind::point);
                break;
            case StepRule::circle_center_radius:
                expect(0, ObjectKind::point);
                break;
            case StepRule::perpendicular_at:
                expect(0, ObjectKind::line);
                expect(1, ObjectKind::point);
                break;
            case StepRule::intersect: {
                if (s.branch < 0)
                    throw ValidationError(s.id, "step '" + s.id + "': negative branch index");
                for (std::size_t i = 0; i < 2; ++i)
                    if (kinds.at(s.inputs[i]) == ObjectKind::point)
                        throw ValidationError(s.id, "step '" + s.id +
                                                        "': cannot intersect a point");
                break;
            }
            case StepRule::macro_call: {
                for (const MacroArg& a : s.macro_args)
                    if (a.kind == MacroArg::Kind::ident && !seen.count(a.ident))
                        throw ValidationError(s.id, "step '" + s.id +
                                                        "' references unknown id '" +
                                                        a.ident + "'");
                break;
            }
            default:
                break;
        }
        kinds[s.id] = result_kind_of(s);
    }
}

// ---------------------------------------------------------------------------
// Evaluate and expand

namespace {

bool is_internal_id(const std::string& id, const std::string& macro_id) {
    return id.size() > macro_id.size() + 2 && id.compare(0, macro_id.size(), macro_id) == 0 &&
           id.compare(macro_id.size(), 2, "__") == 0;
}

void run_macro(const Step& step, ObjectScope& scope, const MacroRegistry& macros,
               StepBuilder& builder) {
    if (!macros.has(step.macro_name))
        throw UnknownMacro(step.macro_name, "unknown macro '" + step.macro_name + "'");
    macros.expander(step.macro_name)(step, builder);
    if (!scope.contains(step.id))
        throw StepFailure(step.id, "macro '" + step.macro_name +
                                       "' did not produce its result '" + step.id + "'");
    const ObjectKind got = kind_of(scope.at(step.id));
    if (got != step.macro_result)
        throw ValidationError(step.id, "macro '" + step.macro_name + "' produces a " +
                                           std::string(kind_name(got)) + ", declared as " +
                                           kind_name(step.macro_result));
}

}  // namespace

Trace evaluate(const ConstructionProgram& p, const Tolerance& tol,
               const MacroRegistry& macros) {
    validate(p);
    ObjectScope scope;
    Trace trace;
    trace.program_name = p.name;

    for (const Step& step : p.steps) {
        if (step.rule == StepRule::macro_call) {
            StepBuilder builder(scope, step.id, tol);
            run_macro(step, scope, macros, builder);
            trace.classes[step.id] = StepClass::macro_op;
            for (const Step& sub : builder.steps()) {
                if (is_internal_id(sub.id, step.id)) continue;
                trace.objects.emplace_back(sub.id, scope.at(sub.id));
                if (sub.id != step.id) trace.classes[sub.id] = classify(sub);
            }
        } else {
            Object obj = evaluate_primitive(step, scope, tol);
            scope.bind(step.id, obj);
            trace.objects.emplace_back(step.id, std::move(obj));
            trace.classes[step.id] = classify(step);
        }
    }
    return trace;
}

ConstructionProgram expand_macros(const ConstructionProgram& p, const Tolerance& tol,
                                  const MacroRegistry& macros) {
    validate(p);
    ObjectScope scope;
    ConstructionProgram out;
    out.name = p.name;
    out.description = p.description;

    for (const Step& step : p.steps) {
        if (step.rule == StepRule::macro_call) {
            StepBuilder builder(scope, step.id, tol);
            run_macro(step, scope, macros, builder);
            for (Step& sub : builder.take()) out.steps.push_back(std::move(sub));
        } else {
            Object obj = evaluate_primitive(step, scope, tol);
            scope.bind(step.id, std::move(obj));
            out.steps.push_back(step);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar formatting and JSON trace exchange

std::string format_scalar(Scalar v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

ordered_json point_json(Point p) {
    return ordered_json{{"x", p.x}, {"y", p.y}};
}

Point point_from_json(const ordered_json& j) {
    return Point{j.at("x").get<Scalar>(), j.at("y").get<Scalar>()};
}

}  // namespace

std::string export_trace(const Trace& t) {
    ordered_json doc;
    doc["format"] = "gcs-trace";
    doc["version"] = 1;
    doc["program"] = t.program_name;
    // Keyed by id, in evaluation order (ordered_json keeps insertion order).
    doc["objects"] = ordered_json::object();

    for (const auto& [id, obj] : t.objects) {
        ordered_json entry;
        entry["type"] = kind_name(kind_of(obj));
        auto cls = t.classes.find(id);
        if (cls != t.classes.end()) entry["class"] = step_class_name(cls->second);
        switch (kind_of(obj)) {
            case ObjectKind::point: {
                const Point p = std::get<Point>(obj);
                entry["x"] = p.x;
                entry["y"] = p.y;
                break;
            }
            case ObjectKind::line: {
                const Line& l = std::get<Line>(obj);
                entry["anchor"] = point_json(l.anchor);
                entry["direction"] = point_json(l.direction);
                break;
            }
            case ObjectKind::ray: {
                const Ray& r = std::get<Ray>(obj);
                entry["origin"] = point_json(r.origin);
                entry["direction"] = point_json(r.direction);
                break;
            }
            case ObjectKind::circle: {
                const Circle& c = std::get<Circle>(obj);
                entry["center"] = point_json(c.center);
                entry["radius"] = c.radius;
                break;
            }
        }
        doc["objects"][id] = std::move(entry);
    }
    return doc.dump(2) + "\n";
}

Trace import_trace(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error(std::string("trace import: invalid JSON: ") + e.what());
    }
    if (doc.value("format", "") != "gcs-trace")
        throw Error("trace import: not a gcs-trace document");

    Trace t;
    t.program_name = doc.value("program", "");
    for (const auto& [id, entry] : doc.at("objects").items()) {
        const std::string type = entry.at("type").get<std::string>();
        Object obj;
        if (type == "point") {
            obj = point_from_json(entry);
        } else if (type == "line") {
            obj = Line{point_from_json(entry.at("anchor")),
                       point_from_json(entry.at("direction"))};
        } else if (type == "ray") {
            obj = Ray{point_from_json(entry.at("origin")),
                      point_from_json(entry.at("direction"))};
        } else if (type == "circle") {
            obj = Circle{point_from_json(entry.at("center")),
                         entry.at("radius").get<Scalar>()};
        } else {
            throw Error("trace import: unknown object type '" + type + "'");
        }
        t.objects.emplace_back(id, std::move(obj));
        if (entry.contains("class")) {
            const std::string c = entry.at("class").get<std::string>();
            if (c == "compass") t.classes[id] = StepClass::compass;
            else if (c == "straightedge") t.classes[id] = StepClass::straightedge;
            else if (c == "macro") t.classes[id] = StepClass::macro_op;
            else if (c == "numeric") t.classes[id] = StepClass::numeric;
            else throw Error("trace import: unknown class '" + c + "'");
        }
    }
    return t;
}

}  // namespace gcs
