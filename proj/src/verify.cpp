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

#include "gcs/verify.hpp"

#include <algorithm>
#include <cmath>

#include "gcs/chain.hpp"
#include "gcs/division.hpp"
#include "gcs/gothic.hpp"
#include "gcs/presets.hpp"

namespace gcs {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, Scalar residual,
           Scalar bound) {
    out.push_back({name, std::abs(residual) <= bound, std::abs(residual), bound});
}

void check_flag(std::vector<CheckResult>& out, const std::string& name, bool ok) {
    out.push_back({name, ok, ok ? 0.0 : 1.0, 0.0});
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> gothic_suite(const Tolerance& tol) {
    std::vector<CheckResult> out;
    const Point a{0, 0}, b{1, 0};
    const Scalar r = 1;

    const auto built = gothic_inscribe(a, b, r, tol);
    const Circle inscribed = built.figure.inscribed;
    const GothicSolution oracle = gothic_oracle(r, r, distance(a, b), tol);

    check(out, "center-offset-vs-oracle", inscribed.center.x - oracle.x, 1e-9);
    check(out, "center-height-vs-oracle", inscribed.center.y - oracle.rho, 1e-9);
    check(out, "radius-vs-oracle", inscribed.radius - oracle.rho, 1e-9);
    check(out, "tangency-to-circle-A",
          distance(inscribed.center, a) - (r - inscribed.radius), 1e-9);
    check(out, "tangency-to-circle-B",
          distance(inscribed.center, b) - (r - inscribed.radius), 1e-9);
    check(out, "tangency-to-base", inscribed.center.y - inscribed.radius, 1e-9);

    const auto kind_a = is_tangent(Circle{a, r}, inscribed, tol);
    const auto kind_b = is_tangent(Circle{b, r}, inscribed, tol);
    check_flag(out, "internal-tangency-detected",
               kind_a == TangencyKind::internal && kind_b == TangencyKind::internal);
    check_flag(out, "expansion-pure-compass-straightedge",
               built.trace.pure_compass_straightedge());
    return out;
}

std::vector<CheckResult> fig2b_suite(const Tolerance& tol) {
    std::vector<CheckResult> out;
    const auto family = gothic_family(1.0, {0.0}, tol);
    check(out, "semicircle-radius", family[0].rho - 0.5, 1e-9);
    check(out, "semicircle-center-offset", family[0].x, 1e-9);

    const Trace t = evaluate(preset("fig2b").program, tol);
    const Circle inscribed = std::get<Circle>(t.at("insc"));
    const Circle outer = std::get<Circle>(t.at("cA"));
    check(out, "preset-radius", inscribed.radius - 0.5, 1e-9);
    check_flag(out, "preset-tangency",
               is_tangent(outer, inscribed, tol) == TangencyKind::internal);
    return out;
}

std::vector<CheckResult> fig2e_suite(const Tolerance& tol) {
    std::vector<CheckResult> out;
    const Scalar a = 1.0, b = 0.8, d = 1.0;
    const GothicSolution sol = gothic_oracle(a, b, d, tol);
    check(out, "tangency-equation-A", sol.x * sol.x - (a * a - 2 * a * sol.rho), 1e-9);
    check(out, "tangency-equation-B",
          (d - sol.x) * (d - sol.x) - (b * b - 2 * b * sol.rho), 1e-9);
    check_flag(out, "radius-admissible", sol.rho > 0 && sol.rho < std::min(a, b));

    const Trace t = evaluate(preset("fig2e").program, tol);
    const Circle inscribed = std::get<Circle>(t.at("insc"));
    check_flag(out, "preset-tangency-A",
               is_tangent(std::get<Circle>(t.at("cA")), inscribed, tol) ==
                   TangencyKind::internal);
    check_flag(out, "preset-tangency-B",
               is_tangent(std::get<Circle>(t.at("cB")), inscribed, tol) ==
                   TangencyKind::internal);
    return out;
}

std::vector<CheckResult> division_suite(bool tangent_circles, const Tolerance& tol) {
    std::vector<CheckResult> out;
    const Point a{0, 0}, b{1, 0};
    const RatioSpec ratio = RatioSpec::of({1, 1, 1});
    const auto expected = interpolation_oracle(a, b, ratio, tol);

    std::vector<Point> got;
    if (tangent_circles) {
        const auto division = divide_tangent_circles(a, b, ratio, 0, tol);
        got = division.points;
        check_flag(out, "expansion-pure-compass-straightedge",
                   division.trace.pure_compass_straightedge());

        Scalar worst_gap = 0, worst_touch = 0;
        for (std::size_t k = 0; k + 1 < division.family.circles.size(); ++k) {
            const Circle& c1 = division.family.circles[k];
            const Circle& c2 = division.family.circles[k + 1];
            worst_gap = std::max(worst_gap,
                                 std::abs(distance(c1.center, c2.center) -
                                          std::abs(c1.radius - c2.radius)));
            worst_touch = std::max(worst_touch, distance(tangency_point(c1, c2, tol), a));
        }
        check(out, "family-internal-tangency", worst_gap, 1e-9);
        check(out, "family-shared-tangency-point", worst_touch, 1e-9);
    } else {
        const auto division = divide_thales(a, b, ratio, tol);
        got = division.points;
        check_flag(out, "expansion-pure-compass-straightedge",
                   division.trace.pure_compass_straightedge());
    }

    Scalar worst = 0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        worst = std::max(worst, distance(got[i], expected[i]));
    check(out, "division-points-vs-oracle", worst, 1e-9);
    return out;
}

std::vector<CheckResult> chain_suite(const Tolerance& tol) {
    std::vector<CheckResult> out;
    const Scalar alpha = 30;
    const AngleChain chain = build_chain(alpha, 1.0, 4, tol);

    Scalar worst_len = 0;
    for (int k = 1; k < chain.size(); ++k)
        worst_len = std::max(worst_len, std::abs(distance(chain.center(k), chain.center(k + 1)) -
                                                 chain.link_length));
    check(out, "link-lengths", worst_len, 1e-9);

    Scalar worst_interior = 0;
    for (int k = 2; k < chain.size(); ++k) {
        const Scalar got = to_degrees(angle_between(chain.center(k - 1) - chain.center(k),
                                                    chain.center(k + 1) - chain.center(k),
                                                    tol));
        const Scalar want = 180 - 2 * static_cast<Scalar>(k - 1) * alpha;
        worst_interior = std::max(worst_interior, std::abs(got - want));
    }
    check(out, "interior-angles", worst_interior, 1e-9);

    Scalar worst_multiple = 0;
    for (int k = 1; k < chain.size(); ++k)
        worst_multiple = std::max(worst_multiple,
                                  std::abs(link_multiple_angle(chain, k, tol) -
                                           static_cast<Scalar>(k) * alpha));
    check(out, "link-multiples", worst_multiple, 1e-9);

    check_flag(out, "multiplicity-bound-flag", chain.degenerate);
    check_flag(out, "max-multiplicity", max_multiplicity(alpha) == 4);
    return out;
}

}  // namespace

std::vector<CheckResult> verify_preset(const std::string& name, const Tolerance& tol) {
    std::vector<CheckResult> out;
    if (name == "gothic-unit" || name == "fig2c" || name == "fig2d") {
        out = gothic_suite(tol);
    } else if (name == "fig2b") {
        out = fig2b_suite(tol);
    } else if (name == "fig2e") {
        out = fig2e_suite(tol);
    } else if (name == "fig1a") {
        out = division_suite(false, tol);
    } else if (name == "fig1b") {
        out = division_suite(true, tol);
    } else if (name == "fig3a" || name == "chain-30-4") {
        out = chain_suite(tol);
    } else {
        throw DomainError("unknown preset '" + name + "'");
    }
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

std::vector<CheckResult> verify_program(const ConstructionProgram& program,
                                        const Tolerance& tol) {
    std::vector<CheckResult> out;
    const ConstructionProgram expanded = expand_macros(program, tol);
    const Trace trace = evaluate(expanded, tol);

    auto deviation = [&](const Object& parent, Point p) -> Scalar {
        switch (kind_of(parent)) {
            case ObjectKind::circle: {
                const Circle& c = std::get<Circle>(parent);
                return std::abs(distance(p, c.center) - c.radius);
            }
            case ObjectKind::line: {
                const Line& l = std::get<Line>(parent);
                return std::abs(cross(l.direction, p - l.anchor));
            }
            case ObjectKind::ray: {
                const Ray& r = std::get<Ray>(parent);
                return std::abs(cross(r.direction, p - r.origin));
            }
            case ObjectKind::point:
                return 0;
        }
        return 0;
    };

    Scalar worst = 0;
    int audited = 0;
    for (const Step& s : expanded.steps) {
        if (s.rule != StepRule::intersect) continue;
        const Point p = std::get<Point>(trace.at(s.id));
        worst = std::max({worst, deviation(trace.at(s.inputs[0]), p),
                          deviation(trace.at(s.inputs[1]), p)});
        ++audited;
    }
    check(out, "intersection-residuals(" + std::to_string(audited) + ")", worst,
          tol.eps_abs);
    check_flag(out, "evaluates", true);
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace gcs
