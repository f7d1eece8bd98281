#include <cmath>
#include <random>

#include "doctest.h"
#include "gcs/division.hpp"

using namespace gcs;

namespace {
const Tolerance tol;
}

TEST_CASE("ratio spec") {
    CHECK_THROWS_AS(RatioSpec::of({3}), DegenerateInput);
    CHECK_THROWS_AS(RatioSpec::of({1, 0}), DegenerateInput);
    const RatioSpec r = RatioSpec::of({2, 3});
    CHECK(r.total() == 5);
    REQUIRE(r.fractions().size() == 1);
    CHECK(r.fractions()[0] == doctest::Approx(0.4));
}

TEST_CASE("transversal division hits the stated points") {
    SUBCASE("equal thirds") {
        const auto d = divide_thales({0, 0}, {1, 0}, RatioSpec::of({1, 1, 1}), tol);
        REQUIRE(d.points.size() == 2);
        CHECK(distance(d.points[0], Point{1.0 / 3, 0}) <= 1e-9);
        CHECK(distance(d.points[1], Point{2.0 / 3, 0}) <= 1e-9);
    }
    SUBCASE("midpoint") {
        const auto d = divide_thales({0, 0}, {1, 0}, RatioSpec::of({1, 1}), tol);
        REQUIRE(d.points.size() == 1);
        CHECK(distance(d.points[0], Point{0.5, 0}) <= 1e-9);
    }
    SUBCASE("oblique segment, ratio 2:3") {
        const auto d = divide_thales({0, 0}, {0.6, 0.8}, RatioSpec::of({2, 3}), tol);
        REQUIRE(d.points.size() == 1);
        CHECK(distance(d.points[0], Point{0.24, 0.32}) <= 1e-9);
    }
    SUBCASE("degenerate segment") {
        CHECK_THROWS_AS(divide_thales({1, 1}, {1, 1}, RatioSpec::of({1, 1}), tol),
                        DegenerateSegment);
    }
}

TEST_CASE("tangent-circle division hits the stated points") {
    SUBCASE("small step radius puts the centers on the segment") {
        const auto d =
            divide_tangent_circles({0, 0}, {3, 0}, RatioSpec::of({1, 1, 1}), 0.5, tol);
        REQUIRE(d.points.size() == 2);
        CHECK(distance(d.points[0], Point{1, 0}) <= 1e-9);
        CHECK(distance(d.points[1], Point{2, 0}) <= 1e-9);
    }
    SUBCASE("default radius, midpoint; outer center above the segment") {
        const auto d = divide_tangent_circles({0, 0}, {1, 0}, RatioSpec::of({1, 1}), 0, tol);
        REQUIRE(d.points.size() == 1);
        CHECK(distance(d.points[0], Point{0.5, 0}) <= 1e-9);
        // |A O2| = 2 on the bisector x = 1/2 gives y = sqrt(4 - 1/4).
        CHECK(distance(d.outer_center, Point{0.5, 1.9364916731037085}) <= 1e-6);
    }
    SUBCASE("radius too small") {
        CHECK_THROWS_AS(
            divide_tangent_circles({0, 0}, {3, 0}, RatioSpec::of({1, 1, 1}), 0.4, tol),
            StepRadiusTooSmall);
    }
    SUBCASE("degenerate segment") {
        CHECK_THROWS_AS(
            divide_tangent_circles({2, 2}, {2, 2}, RatioSpec::of({1, 1}), 0, tol),
            DegenerateSegment);
    }
}

TEST_CASE("interpolation oracle") {
    const auto pts = interpolation_oracle({0, 0}, {1, 0}, RatioSpec::of({1, 1, 1}), tol);
    REQUIRE(pts.size() == 2);
    CHECK(distance(pts[0], Point{1.0 / 3, 0}) <= 1e-15);
    CHECK(distance(pts[1], Point{2.0 / 3, 0}) <= 1e-15);

    const auto mid = interpolation_oracle({0, 0}, {1, 0}, RatioSpec::of({1, 1}), tol);
    CHECK(distance(mid[0], Point{0.5, 0}) <= 1e-15);
    const auto oblique = interpolation_oracle({0, 0}, {0.6, 0.8}, RatioSpec::of({2, 3}), tol);
    CHECK(distance(oblique[0], Point{0.24, 0.32}) <= 1e-15);

    CHECK_THROWS_AS(interpolation_oracle({0, 0}, {0, 0}, RatioSpec::of({1, 1}), tol),
                    DegenerateSegment);
}

namespace {

RatioSpec random_ratio(std::mt19937& rng) {
    std::uniform_int_distribution<int> m_dist(2, 5);
    std::uniform_int_distribution<long long> part(1, 4);
    while (true) {
        std::vector<long long> parts;
        const int m = m_dist(rng);
        long long total = 0;
        for (int i = 0; i < m; ++i) {
            parts.push_back(part(rng));
            total += parts.back();
        }
        if (total <= 12) return RatioSpec::of(parts);
    }
}

}  // namespace

TEST_CASE("both constructions agree with the oracle on random input") {
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> coord(-5, 5);

    for (int i = 0; i < 200; ++i) {
        const Point a{coord(rng), coord(rng)};
        Point b{coord(rng), coord(rng)};
        if (distance(a, b) < 0.1) b.x += 1;
        const RatioSpec ratio = random_ratio(rng);
        const auto expected = interpolation_oracle(a, b, ratio, tol);

        const auto thales = divide_thales(a, b, ratio, tol);
        const auto circles = divide_tangent_circles(a, b, ratio, 0, tol);
        REQUIRE(thales.points.size() == expected.size());
        REQUIRE(circles.points.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            CHECK(distance(thales.points[k], expected[k]) <= 1e-9);
            CHECK(distance(circles.points[k], expected[k]) <= 1e-9);
        }
    }
}

TEST_CASE("expanded traces are pure compass and straightedge") {
    const auto thales = divide_thales({0, 0}, {2, 1}, RatioSpec::of({1, 2, 1}), tol);
    CHECK(thales.trace.pure_compass_straightedge());
    const auto circles =
        divide_tangent_circles({0, 0}, {2, 1}, RatioSpec::of({1, 2, 1}), 0, tol);
    CHECK(circles.trace.pure_compass_straightedge());
}

TEST_CASE("tangent family: consecutive circles touch at the shared point") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coord(-4, 4);
    for (int i = 0; i < 50; ++i) {
        const Point a{coord(rng), coord(rng)};
        Point b{coord(rng), coord(rng)};
        if (distance(a, b) < 0.1) b.y += 1;
        const auto d = divide_tangent_circles(a, b, random_ratio(rng), 0, tol);

        REQUIRE(d.family.circles.size() >= 2);
        for (std::size_t k = 0; k + 1 < d.family.circles.size(); ++k) {
            const Circle& c1 = d.family.circles[k];
            const Circle& c2 = d.family.circles[k + 1];
            CHECK(c1.radius < c2.radius);
            CHECK(is_tangent(c1, c2, tol) == TangencyKind::internal);
            CHECK(distance(tangency_point(c1, c2, tol), a) <= tol.eps_abs);
        }
    }
}

TEST_CASE("homothety carries the outer circle onto each family circle") {
    const Point a{0.5, -0.25}, b{2, 1.5};
    const auto d = divide_tangent_circles(a, b, RatioSpec::of({2, 1, 2}), 0, tol);
    const Circle outer = d.family.circles.back();
    const auto n = static_cast<Scalar>(d.family.circles.size());

    for (std::size_t k = 0; k < d.family.circles.size(); ++k) {
        const Circle& target = d.family.circles[k];
        const Scalar f = static_cast<Scalar>(k + 1) / n;
        for (int s = 0; s < 8; ++s) {
            const Scalar phi = 2 * kPi * s / 8;
            const Point on_outer =
                outer.center + outer.radius * Point{std::cos(phi), std::sin(phi)};
            const Point mapped = a + f * (on_outer - a);
            CHECK(std::abs(distance(mapped, target.center) - target.radius) <= 1e-9);
        }
    }
}
