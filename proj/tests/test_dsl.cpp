#include <random>
#include <sstream>

#include "doctest.h"
#include "gcs/dsl.hpp"

using namespace gcs;

TEST_CASE("single statements parse") {
    SUBCASE("free point") {
        const auto p = parse("point A = (0,0)");
        REQUIRE(p.steps.size() == 1);
        CHECK(p.steps[0].rule == StepRule::free_point);
        CHECK(p.steps[0].id == "A");
        CHECK(p.steps[0].coords.x == 0);
    }
    SUBCASE("numbers with exponents and signs") {
        const auto p = parse("point A = (-1.5e-3, +2.25)");
        CHECK(p.steps[0].coords.x == -1.5e-3);
        CHECK(p.steps[0].coords.y == 2.25);
    }
    SUBCASE("comments and blank lines") {
        const auto p = parse("# heading\n\npoint A = (1, 2)  # trailing\n\n");
        CHECK(p.steps.size() == 1);
    }
    SUBCASE("all operation forms") {
        const auto p = parse(
            "point A = (0, 0)\n"
            "point B = (1, 0)\n"
            "line l = line(A, B)\n"
            "ray r = ray(A, B)\n"
            "circle c1 = circle(A, B)\n"
            "circle c2 = circle(A, r=2.5)\n"
            "point P = intersect(c1, l, 0)\n"
            "point M = midpoint(A, B)\n"
            "line pp = perp(l, at=A)\n"
            "line bb = bisector(A, B)\n"
            "point D = macro divide_thales(A, B, 2:3)\n");
        CHECK(p.steps.size() == 11);
        CHECK(p.steps[5].rule == StepRule::circle_center_radius);
        CHECK(p.steps[5].radius == 2.5);
        CHECK(p.steps[10].rule == StepRule::macro_call);
        REQUIRE(p.steps[10].macro_args.size() == 3);
        CHECK(p.steps[10].macro_args[2].kind == MacroArg::Kind::ratio);
        CHECK(p.steps[10].macro_args[2].ratio == std::vector<long long>{2, 3});
    }
    SUBCASE("a point named r still works as a circle argument") {
        const auto p = parse(
            "point A = (0, 0)\n"
            "point r = (2, 0)\n"
            "circle c = circle(A, r)\n");
        CHECK(p.steps[2].rule == StepRule::circle_center_point);
        CHECK(p.steps[2].inputs == std::vector<std::string>{"A", "r"});
        const auto again = parse(format(p));
        CHECK(structurally_equal(p, again));
    }
    SUBCASE("angle arguments carry the deg suffix") {
        const auto p = parse("point C = macro angle_chain(alpha=30deg, R=1, n=4)");
        REQUIRE(p.steps[0].macro_args.size() == 3);
        CHECK(p.steps[0].macro_args[0].kind == MacroArg::Kind::angle_deg);
        CHECK(p.steps[0].macro_args[0].key == "alpha");
        CHECK(p.steps[0].macro_args[0].number == 30);
    }
}

TEST_CASE("a large branch index parses; it only fails at evaluation") {
    const auto p = parse(
        "point A = (0, 0)\n"
        "point B = (1, 0)\n"
        "circle c1 = circle(A, B)\n"
        "circle c2 = circle(B, A)\n"
        "point P = intersect(c1, c2, 2)\n");
    CHECK(p.steps.back().branch == 2);
    CHECK_THROWS_AS(evaluate(p), BranchUnavailable);
}

namespace {

void check_parse_error(const std::string& source, int expected_line) {
    try {
        parse(source);
        FAIL_CHECK("expected ParseError for: " << source);
    } catch (const ParseError& e) {
        CHECK(e.line == expected_line);
        // The location indexes a real character of the offending line.
        std::istringstream in(source);
        std::string line;
        for (int i = 0; i < e.line; ++i) std::getline(in, line);
        CHECK(e.column >= 1);
        CHECK(e.column <= static_cast<int>(line.size()));
    }
}

void check_validation_error(const std::string& source) {
    CHECK_THROWS_AS(parse(source), ValidationError);
}

}  // namespace

TEST_CASE("syntax errors carry in-bounds locations") {
    check_parse_error("point A = (0 0)", 1);
    check_parse_error("point A (0, 0)", 1);
    check_parse_error("point A = (0, 0)\nfrob B = (1, 1)", 2);
    check_parse_error("point A = 0, 0)", 1);
    check_parse_error("point A = (0, 0) extra", 1);
    check_parse_error("line l = wedge(A, B)", 1);
    check_parse_error("point A = (3..5, 0)", 1);
    check_parse_error("point A = (1, 2km)", 1);
    check_parse_error("point A = (0, 0)\ncircle c = circle(A, r=)", 2);
}

TEST_CASE("validation errors: duplicates, unknown references, arity") {
    check_validation_error("point A = (0, 0)\npoint A = (1, 1)");
    check_validation_error("line l = line(A, B)");
    check_validation_error("point A = (0, 0)\nline l = line(A)");
    check_validation_error("point A = (0, 0)\npoint B = (1, 0)\nline l = line(A, B, B)");
    check_validation_error("point A = (0, 0)\npoint B = (1, 0)\n"
                           "point P = intersect(A, B, -1)");
    check_validation_error("point A = (0, 0)\npoint B = (1, 0)\n"
                           "point D = macro divide_thales(A, B, 0:3)");
}

TEST_CASE("format emits the documented style") {
    const auto p = parse("point A = (0,0)");
    CHECK(format(p) == "point A = (0, 0)\n");
}

TEST_CASE("round trip on a gothic scenario script") {
    const std::string source =
        "point A = (0, 0)\n"
        "point B = (1, 0)\n"
        "circle G = macro gothic_inscribe(A, B, r=1)\n";
    const auto p = parse(source);
    const auto again = parse(format(p));
    CHECK(structurally_equal(p, again));
    CHECK(format(again) == format(p));
}

namespace {

// Random valid programs covering every statement form.
ConstructionProgram random_program(std::mt19937& rng) {
    std::uniform_real_distribution<double> coord(-20, 20);
    std::uniform_int_distribution<int> statement(0, 9);
    std::uniform_int_distribution<int> count(4, 14);

    std::vector<std::string> points, lines, circles;
    std::string source;
    int serial = 0;
    auto fresh = [&] { return "v" + std::to_string(serial++); };
    auto num = [&] { return format_scalar(coord(rng)); };
    auto pick = [&](const std::vector<std::string>& pool) {
        std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
        return pool[d(rng)];
    };

    auto add_point = [&] {
        const std::string id = fresh();
        source += "point " + id + " = (" + num() + ", " + num() + ")\n";
        points.push_back(id);
    };
    add_point();
    add_point();

    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const std::string id = fresh();
        switch (statement(rng)) {
            case 0:
                add_point();
                break;
            case 1:
                source += "line " + id + " = line(" + pick(points) + ", " + pick(points) +
                          ")\n";
                lines.push_back(id);
                break;
            case 2:
                source += "ray " + id + " = ray(" + pick(points) + ", " + pick(points) +
                          ")\n";
                break;
            case 3:
                source += "circle " + id + " = circle(" + pick(points) + ", " +
                          pick(points) + ")\n";
                circles.push_back(id);
                break;
            case 4:
                source += "circle " + id + " = circle(" + pick(points) + ", r=" + num() +
                          ")\n";
                circles.push_back(id);
                break;
            case 5:
                if (circles.size() < 2) break;
                source += "point " + id + " = intersect(" + pick(circles) + ", " +
                          pick(circles) + ", 1)\n";
                points.push_back(id);
                break;
            case 6:
                source += "point " + id + " = midpoint(" + pick(points) + ", " +
                          pick(points) + ")\n";
                points.push_back(id);
                break;
            case 7:
                if (lines.empty()) break;
                source += "line " + id + " = perp(" + pick(lines) + ", at=" +
                          pick(points) + ")\n";
                lines.push_back(id);
                break;
            case 8:
                source += "line " + id + " = bisector(" + pick(points) + ", " +
                          pick(points) + ")\n";
                lines.push_back(id);
                break;
            case 9:
                source += "point " + id + " = macro divide_thales(" + pick(points) +
                          ", " + pick(points) + ", 1:2:3)\n";
                points.push_back(id);
                break;
        }
    }
    return parse(source);
}

}  // namespace

TEST_CASE("round trip on 100 random programs") {
    std::mt19937 rng(998877);
    for (int i = 0; i < 100; ++i) {
        const ConstructionProgram p = random_program(rng);
        const std::string text = format(p);
        ConstructionProgram back;
        REQUIRE_NOTHROW(back = parse(text));
        if (!structurally_equal(p, back)) {
            FAIL_CHECK("round trip mismatch for:\n" << text);
        }
        // Numbers reproduce exactly, so a second trip is byte-stable.
        CHECK(format(back) == text);
    }
}
