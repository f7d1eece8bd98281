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

#include "gcs/presets.hpp"

#include <map>

#include "gcs/chain.hpp"
#include "gcs/division.hpp"
#include "gcs/gothic.hpp"

namespace gcs {

namespace {

Step free_step(const std::string& id, Point p) {
    Step s;
    s.id = id;
    s.rule = StepRule::free_point;
    s.coords = p;
    return s;
}

Step op_step(const std::string& id, StepRule rule, std::vector<std::string> inputs) {
    Step s;
    s.id = id;
    s.rule = rule;
    s.inputs = std::move(inputs);
    return s;
}

Step circle_r_step(const std::string& id, const std::string& center, Scalar r) {
    Step s;
    s.id = id;
    s.rule = StepRule::circle_center_radius;
    s.inputs = {center};
    s.radius = r;
    return s;
}

Step intersect_step(const std::string& id, const std::string& a, const std::string& b,
                    int branch) {
    Step s;
    s.id = id;
    s.rule = StepRule::intersect;
    s.inputs = {a, b};
    s.branch = branch;
    return s;
}

MacroArg ident_arg(const std::string& id) {
    MacroArg a;
    a.kind = MacroArg::Kind::ident;
    a.ident = id;
    return a;
}

MacroArg ratio_arg(std::vector<long long> parts) {
    MacroArg a;
    a.kind = MacroArg::Kind::ratio;
    a.ratio = std::move(parts);
    return a;
}

MacroArg key_number(const std::string& key, Scalar v) {
    MacroArg a;
    a.kind = MacroArg::Kind::number;
    a.key = key;
    a.number = v;
    return a;
}

MacroArg key_angle(const std::string& key, Scalar deg) {
    MacroArg a;
    a.kind = MacroArg::Kind::angle_deg;
    a.key = key;
    a.number = deg;
    return a;
}

Step macro_step(const std::string& id, const std::string& name, ObjectKind result,
                std::vector<MacroArg> args) {
    Step s;
    s.id = id;
    s.rule = StepRule::macro_call;
    s.macro_name = name;
    s.macro_result = result;
    s.macro_args = std::move(args);
    return s;
}

Point pt(const Trace& t, const std::string& id) { return std::get<Point>(t.at(id)); }

SceneItem item(std::string id, SceneObject obj, PlotClass cls) {
    return SceneItem{std::move(id), std::move(obj), cls};
}

// --------------------------------------------------------------------------
// Display builders

std::vector<SceneItem> display_division(const Trace& t) {
    const Point a = pt(t, "A"), b = pt(t, "B");
    std::vector<SceneItem> scene;
    scene.push_back(item("base", Segment{a, b}, PlotClass::given));
    scene.push_back(item("A", a, PlotClass::given));
    scene.push_back(item("B", b, PlotClass::given));
    scene.push_back(item("D", pt(t, "D"), PlotClass::result));
    for (int k = 2;; ++k) {
        const std::string id = "D_" + std::to_string(k);
        if (!t.contains(id)) break;
        scene.push_back(item(id, pt(t, id), PlotClass::result));
    }
    return scene;
}

std::vector<SceneItem> display_division_circles(const Trace& t) {
    std::vector<SceneItem> scene = display_division(t);
    // The tangent-circle family is the figure's point; recompute it.
    const auto division = divide_tangent_circles(pt(t, "A"), pt(t, "B"),
                                                 RatioSpec::of({1, 1, 1}));
    int i = 0;
    for (const Circle& c : division.family.circles)
        scene.push_back(item("ring" + std::to_string(++i), c, PlotClass::auxiliary));
    return scene;
}

std::vector<SceneItem> display_gothic_unit(const Trace& t) {
    const Point a = pt(t, "A"), b = pt(t, "B");
    const Circle inscribed = std::get<Circle>(t.at("G"));
    const Scalar r = distance(a, b);  // unit figure: radius equals the base
    return {
        item("cA", Circle{a, r}, PlotClass::given),
        item("cB", Circle{b, r}, PlotClass::given),
        item("inscribed", inscribed, PlotClass::result),
        item("base", Segment{a, b}, PlotClass::given),
    };
}

std::vector<SceneItem> display_gothic_steps(const Trace& t) {
    std::vector<SceneItem> scene = display_gothic_unit(t);
    scene.push_back(item("C", pt(t, "G_C"), PlotClass::auxiliary));
    scene.push_back(item("D0", pt(t, "G_D0"), PlotClass::result));
    scene.push_back(item("X", pt(t, "G_X"), PlotClass::result));
    return scene;
}

std::vector<SceneItem> display_fig2b(const Trace& t) {
    const Point a = pt(t, "A");
    const Circle inscribed = std::get<Circle>(t.at("insc"));
    return {
        item("arc", Arc{a, 1.0, 0, kPi}, PlotClass::given),
        item("base", Segment{a - Point{1, 0}, a + Point{1, 0}}, PlotClass::given),
        item("inscribed", inscribed, PlotClass::result),
        item("D0", a, PlotClass::result),
    };
}

std::vector<SceneItem> chain_scene(const Trace& t, bool full_figure) {
    std::vector<SceneItem> scene;
    std::vector<Point> centers;
    for (int k = 1;; ++k) {
        const std::string id = "CH_" + std::to_string(k);
        if (!t.contains(id)) break;
        centers.push_back(pt(t, id));
    }
    if (full_figure) {
        scene.push_back(item("rayA", std::get<Ray>(t.at("CH_rayA")), PlotClass::given));
        scene.push_back(item("rayB", std::get<Ray>(t.at("CH_rayB")), PlotClass::given));
        const Scalar r = distance(centers[0], centers[1]);
        for (std::size_t k = 0; k < centers.size(); ++k)
            scene.push_back(item("k" + std::to_string(k + 1), Circle{centers[k], r},
                                 PlotClass::auxiliary));
    }
    for (std::size_t k = 0; k + 1 < centers.size(); ++k)
        scene.push_back(item("link" + std::to_string(k + 1),
                             Segment{centers[k], centers[k + 1]}, PlotClass::result));
    for (std::size_t k = 0; k < centers.size(); ++k)
        scene.push_back(
            item("C" + std::to_string(k + 1), centers[k], PlotClass::result));
    return scene;
}

std::vector<SceneItem> display_chain(const Trace& t) { return chain_scene(t, false); }
std::vector<SceneItem> display_fig3a(const Trace& t) { return chain_scene(t, true); }

// --------------------------------------------------------------------------
// Programs

ConstructionProgram division_preset(const char* name, const char* macro_name,
                                    const char* summary) {
    ConstructionProgram p;
    p.name = name;
    p.description = summary;
    p.steps = {
        free_step("A", {0, 0}),
        free_step("B", {1, 0}),
        macro_step("D", macro_name, ObjectKind::point,
                   {ident_arg("A"), ident_arg("B"), ratio_arg({1, 1, 1})}),
    };
    return p;
}

ConstructionProgram gothic_preset(const char* name, const char* summary) {
    ConstructionProgram p;
    p.name = name;
    p.description = summary;
    p.steps = {
        free_step("A", {0, 0}),
        free_step("B", {1, 0}),
        macro_step("G", "gothic_inscribe", ObjectKind::circle,
                   {ident_arg("A"), ident_arg("B"), key_number("r", 1)}),
    };
    return p;
}

ConstructionProgram chain_preset(const char* name, const char* summary) {
    ConstructionProgram p;
    p.name = name;
    p.description = summary;
    p.steps = {
        macro_step("CH", "angle_chain", ObjectKind::point,
                   {key_angle("alpha", 30), key_number("R", 1), key_number("n", 4)}),
    };
    return p;
}

ConstructionProgram fig2b_program() {
    ConstructionProgram p;
    p.name = "fig2b";
    p.description = "single semicircle with its inscribed circle";
    p.steps = {
        free_step("A", {0, 0}),
        free_step("E", {1, 0}),
        op_step("cA", StepRule::circle_center_point, {"A", "E"}),
        op_step("base", StepRule::line_through, {"A", "E"}),
        free_step("X", {0, 0.5}),
        op_step("insc", StepRule::circle_center_point, {"X", "A"}),
    };
    return p;
}

ConstructionProgram fig2c_program() {
    ConstructionProgram p;
    p.name = "fig2c";
    p.description = "two equal arcs through each other's center";
    p.steps = {
        free_step("A", {0, 0}),
        free_step("B", {1, 0}),
        op_step("cA", StepRule::circle_center_point, {"A", "B"}),
        op_step("cB", StepRule::circle_center_point, {"B", "A"}),
        op_step("base", StepRule::line_through, {"A", "B"}),
        intersect_step("C", "cA", "cB", 1),
        op_step("D0", StepRule::midpoint, {"A", "B"}),
    };
    return p;
}

std::vector<SceneItem> display_fig2c(const Trace& t) {
    return {
        item("cA", std::get<Circle>(t.at("cA")), PlotClass::given),
        item("cB", std::get<Circle>(t.at("cB")), PlotClass::given),
        item("base", Segment{pt(t, "A"), pt(t, "B")}, PlotClass::given),
        item("C", pt(t, "C"), PlotClass::result),
        item("D0", pt(t, "D0"), PlotClass::result),
    };
}

ConstructionProgram fig2e_program() {
    const GothicSolution sol = gothic_oracle(1.0, 0.8, 1.0);
    ConstructionProgram p;
    p.name = "fig2e";
    p.description = "arcs of different radii with the inscribed circle";
    p.steps = {
        free_step("A", {0, 0}),
        free_step("B", {1, 0}),
        circle_r_step("cA", "A", 1.0),
        circle_r_step("cB", "B", 0.8),
        op_step("base", StepRule::line_through, {"A", "B"}),
        free_step("X", {sol.x, sol.rho}),
        circle_r_step("insc", "X", sol.rho),
        free_step("D0", {sol.x, 0}),
    };
    return p;
}

std::vector<SceneItem> display_fig2e(const Trace& t) {
    return {
        item("cA", std::get<Circle>(t.at("cA")), PlotClass::given),
        item("cB", std::get<Circle>(t.at("cB")), PlotClass::given),
        item("base", Segment{pt(t, "A"), pt(t, "B")}, PlotClass::given),
        item("inscribed", std::get<Circle>(t.at("insc")), PlotClass::result),
        item("D0", pt(t, "D0"), PlotClass::result),
        item("X", pt(t, "X"), PlotClass::result),
    };
}

std::map<std::string, Preset> build_presets() {
    std::map<std::string, Preset> out;
    auto put = [&](Preset p) { out.emplace(p.name, std::move(p)); };

    put({"fig1a", "segment divided 1:1:1 by the transversal construction",
         division_preset("fig1a", "divide_thales",
                         "segment divided 1:1:1 by the transversal construction"),
         display_division});
    put({"fig1b", "segment divided 1:1:1 by internally tangent circles",
         division_preset("fig1b", "divide_circles",
                         "segment divided 1:1:1 by internally tangent circles"),
         display_division_circles});
    put({"fig2b", "single semicircle with its inscribed circle", fig2b_program(),
         display_fig2b});
    put({"fig2c", "two equal arcs through each other's center", fig2c_program(),
         display_fig2c});
    put({"fig2d", "completed equal-radius construction", gothic_preset(
             "fig2d", "completed equal-radius construction"),
         display_gothic_steps});
    put({"fig2e", "arcs of different radii with the inscribed circle", fig2e_program(),
         display_fig2e});
    put({"gothic-unit", "unit two-arc triangle with its inscribed circle",
         gothic_preset("gothic-unit", "unit two-arc triangle with its inscribed circle"),
         display_gothic_unit});
    put({"fig3a", "chain of four equal circles on a 30 degree angle",
         chain_preset("fig3a", "chain of four equal circles on a 30 degree angle"),
         display_fig3a});
    put({"chain-30-4", "broken line of the 30 degree chain",
         chain_preset("chain-30-4", "broken line of the 30 degree chain"),
         display_chain});
    return out;
}

const std::map<std::string, Preset>& presets() {
    static const std::map<std::string, Preset> all = build_presets();
    return all;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, p] : presets()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_preset(const std::string& name) { return presets().count(name) > 0; }

const Preset& preset(const std::string& name) {
    auto it = presets().find(name);
    if (it == presets().end()) throw DomainError("unknown preset '" + name + "'");
    return it->second;
}

std::vector<SceneItem> preset_scene(const Preset& p, const Tolerance& tol) {
    const Trace t = evaluate(p.program, tol);
    return p.display(t);
}

}  // namespace gcs
