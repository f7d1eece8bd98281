#include <regex>

#include "doctest.h"
#include "gcs/dsl.hpp"
#include "gcs/presets.hpp"
#include "gcs/svg.hpp"

using namespace gcs;

namespace {

const Tolerance tol;

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("a trace with a single circle renders exactly one circle element") {
    Trace t;
    t.program_name = "one";
    t.objects.emplace_back("c", Circle{{0, 0}, 1});
    const std::string svg = render_trace(t, Style{});
    CHECK(count_occurrences(svg, "<circle") == 1);
    CHECK(count_occurrences(svg, "<line") == 0);
}

TEST_CASE("empty scenes are rejected") {
    Trace t;
    CHECK_THROWS_AS(render_trace(t, Style{}), EmptyTrace);
    CHECK_THROWS_AS(render_scene({}, Style{}), EmptyTrace);
}

TEST_CASE("gothic preset: three circles and one line") {
    const auto scene = preset_scene(preset("gothic-unit"), tol);
    const std::string svg = render_scene(scene, Style{});
    CHECK(count_occurrences(svg, "<circle") == 3);
    CHECK(count_occurrences(svg, "<line") == 1);
}

TEST_CASE("chain preset: four point markers and three segments") {
    const auto scene = preset_scene(preset("chain-30-4"), tol);
    const std::string svg = render_scene(scene, Style{});
    CHECK(count_occurrences(svg, "<circle") == 4);  // r=2 point dots
    CHECK(count_occurrences(svg, "class=\"point") == 4);
    CHECK(count_occurrences(svg, "<line") == 3);
}

TEST_CASE("rendering is byte-identical across runs") {
    for (const std::string& name : preset_names()) {
        const auto scene1 = preset_scene(preset(name), tol);
        const auto scene2 = preset_scene(preset(name), tol);
        CHECK(render_scene(scene1, Style{}) == render_scene(scene2, Style{}));
    }
}

TEST_CASE("rendered coordinates invert back to world coordinates") {
    std::vector<SceneItem> scene = {
        {"p1", Point{0.125, -0.75}, PlotClass::result},
        {"p2", Point{2.5, 1.375}, PlotClass::given},
        {"c", Circle{{1.0, 0.25}, 0.625}, PlotClass::result},
        {"s", Segment{{0.125, -0.75}, {2.5, 1.375}}, PlotClass::auxiliary},
    };
    const Style style;
    const ViewTransform vt = view_transform(scene, style);
    const std::string svg = render_scene(scene, style);

    // Pull every circle element back through the inverse transform.
    const std::regex circle_re(
        "<circle[^>]*cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\" r=\"([-0-9.]+)\"");
    std::sregex_iterator it(svg.begin(), svg.end(), circle_re), end;
    std::vector<Point> recovered;
    std::vector<double> radii;
    for (; it != end; ++it) {
        recovered.push_back(vt.to_world(Point{std::stod((*it)[1]), std::stod((*it)[2])}));
        radii.push_back(std::stod((*it)[3]) / vt.scale);
    }
    REQUIRE(recovered.size() == 3);
    CHECK(distance(recovered[0], Point{0.125, -0.75}) <= 1e-6);
    CHECK(distance(recovered[1], Point{2.5, 1.375}) <= 1e-6);
    CHECK(distance(recovered[2], Point{1.0, 0.25}) <= 1e-6);
    CHECK(std::abs(radii[2] - 0.625) <= 1e-6);

    // Segment endpoints too.
    const std::regex line_re(
        "<line[^>]*x1=\"([-0-9.]+)\" y1=\"([-0-9.]+)\" x2=\"([-0-9.]+)\" y2=\"([-0-9.]+)\"");
    std::sregex_iterator lit(svg.begin(), svg.end(), line_re);
    REQUIRE(lit != end);
    const Point e1 = vt.to_world(Point{std::stod((*lit)[1]), std::stod((*lit)[2])});
    const Point e2 = vt.to_world(Point{std::stod((*lit)[3]), std::stod((*lit)[4])});
    CHECK(distance(e1, Point{0.125, -0.75}) <= 1e-6);
    CHECK(distance(e2, Point{2.5, 1.375}) <= 1e-6);
}

TEST_CASE("unbounded objects are clipped, not dropped") {
    std::vector<SceneItem> scene = {
        {"p", Point{0, 0}, PlotClass::given},
        {"q", Point{1, 1}, PlotClass::given},
        {"l", Line{{0, 0}, {0.7071067811865476, 0.7071067811865476}}, PlotClass::result},
        {"r", Ray{{0, 1}, {1, 0}}, PlotClass::result},
    };
    const std::string svg = render_scene(scene, Style{});
    CHECK(count_occurrences(svg, "<line") == 2);
}

TEST_CASE("full trace render draws macro internals as auxiliary") {
    const auto program = parse(
        "point A = (0, 0)\n"
        "point B = (1, 0)\n"
        "circle G = macro gothic_inscribe(A, B, r=1)\n");
    const Trace t = evaluate(expand_macros(program, tol), tol);
    const std::string svg = render_trace(t, Style{});
    CHECK(count_occurrences(svg, "class=\"auxiliary\"") > 0);
    CHECK(count_occurrences(svg, "data-id=\"G\"") == 1);
}
