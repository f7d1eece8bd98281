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

#include "gcs/geometry.hpp"

#include <algorithm>

namespace gcs {

namespace {

void require_finite(Scalar v, const char* what) {
    if (!std::isfinite(v)) throw NonFiniteInput(std::string("non-finite ") + what);
}

void require_finite(Point p, const char* what) {
    require_finite(p.x, what);
    require_finite(p.y, what);
}

void sort_lex(std::vector<Point>& pts, const Tolerance& tol) {
    std::sort(pts.begin(), pts.end(),
              [&](Point a, Point b) { return lex_less(a, b, tol); });
}

}  // namespace

bool lex_less(Point a, Point b, const Tolerance& tol) {
    if (!tol.near(a.x, b.x)) return a.x < b.x;
    return a.y < b.y;
}

Point unit(Point p, const Tolerance& tol) {
    const Scalar n = norm(p);
    if (n <= tol.eps_abs) throw ZeroVector("cannot normalize a near-zero vector");
    return {p.x / n, p.y / n};
}

Point rotated(Point p, Scalar radians) {
    const Scalar c = std::cos(radians), s = std::sin(radians);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

Line make_line(Point a, Point b, const Tolerance& tol) {
    require_finite(a, "line point");
    require_finite(b, "line point");
    if (points_equal(a, b, tol)) throw DegenerateInput("line through two coincident points");
    return Line{a, unit(b - a, tol)};
}

Ray make_ray(Point origin, Point through, const Tolerance& tol) {
    require_finite(origin, "ray origin");
    require_finite(through, "ray point");
    if (points_equal(origin, through, tol))
        throw DegenerateInput("ray through its own origin");
    return Ray{origin, unit(through - origin, tol)};
}

Circle make_circle(Point center, Scalar radius, const Tolerance& tol) {
    require_finite(center, "circle center");
    require_finite(radius, "circle radius");
    if (radius <= tol.eps_abs) throw DegenerateInput("circle radius must be positive");
    return Circle{center, radius};
}

bool lines_equal(const Line& a, const Line& b, const Tolerance& tol) {
    if (!tol.near_zero(cross(a.direction, b.direction))) return false;
    return tol.near_zero(cross(b.anchor - a.anchor, a.direction));
}

bool rays_equal(const Ray& a, const Ray& b, const Tolerance& tol) {
    return points_equal(a.origin, b.origin, tol) &&
           points_equal(a.direction, b.direction, tol);
}

bool circles_equal(const Circle& a, const Circle& b, const Tolerance& tol) {
    return points_equal(a.center, b.center, tol) && tol.near(a.radius, b.radius);
}

bool segments_equal(const Segment& a, const Segment& b, const Tolerance& tol) {
    return points_equal(a.a, b.a, tol) && points_equal(a.b, b.b, tol);
}

std::vector<Point> intersect(const Circle& c1_in, const Circle& c2_in, const Tolerance& tol) {
    require_finite(c1_in.center, "circle center");
    require_finite(c2_in.center, "circle center");
    require_finite(c1_in.radius, "circle radius");
    require_finite(c2_in.radius, "circle radius");

    // Canonical argument order makes the op symmetric bit-for-bit.
    const Circle* first = &c1_in;
    const Circle* second = &c2_in;
    if (std::tie(c2_in.center.x, c2_in.center.y, c2_in.radius) <
        std::tie(c1_in.center.x, c1_in.center.y, c1_in.radius)) {
        std::swap(first, second);
    }
    const Circle& c1 = *first;
    const Circle& c2 = *second;

    const Point delta = c2.center - c1.center;
    const Scalar d = norm(delta);
    const Scalar rsum = c1.radius + c2.radius;
    const Scalar rdiff = std::abs(c1.radius - c2.radius);

    if (d <= tol.eps_abs) {
        if (tol.near(c1.radius, c2.radius))
            throw IdenticalCircles("coincident circles intersect everywhere");
        return {};
    }

    const Point u = {delta.x / d, delta.y / d};

    // Snap tangencies to a single point before the general quadratic.
    if (std::abs(d - rsum) <= tol.eps_abs) {
        return {c1.center + c1.radius * u};
    }
    if (std::abs(d - rdiff) <= tol.eps_abs) {
        const Scalar side = c1.radius >= c2.radius ? 1.0 : -1.0;
        return {c1.center + side * c1.radius * u};
    }

    if (d > rsum || d < rdiff) return {};

    const Scalar a = (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2 * d);
    const Scalar h_sq = std::max<Scalar>(0, c1.radius * c1.radius - a * a);
    const Scalar h = std::sqrt(h_sq);
    const Point base = c1.center + a * u;
    const Point offset = h * perp(u);

    std::vector<Point> pts = {base + offset, base - offset};
    sort_lex(pts, tol);
    return pts;
}

std::vector<Point> intersect(const Line& l, const Circle& c, const Tolerance& tol) {
    require_finite(l.anchor, "line anchor");
    require_finite(l.direction, "line direction");
    require_finite(c.center, "circle center");
    require_finite(c.radius, "circle radius");

    const Scalar t0 = line_parameter(l, c.center);
    const Point closest = l.anchor + t0 * l.direction;
    const Scalar gap = distance(closest, c.center);

    if (std::abs(gap - c.radius) <= tol.eps_abs) {
        return {closest};
    }
    if (gap > c.radius) return {};

    const Scalar h = std::sqrt(std::max<Scalar>(0, c.radius * c.radius - gap * gap));
    std::vector<Point> pts = {l.anchor + (t0 - h) * l.direction,
                              l.anchor + (t0 + h) * l.direction};
    sort_lex(pts, tol);
    return pts;
}

Point intersect(const Line& l1, const Line& l2, const Tolerance& tol) {
    require_finite(l1.anchor, "line anchor");
    require_finite(l2.anchor, "line anchor");
    const Scalar denom = cross(l1.direction, l2.direction);
    if (std::abs(denom) <= tol.eps_abs)
        throw ParallelLines("lines are parallel within tolerance");
    const Scalar t = cross(l2.anchor - l1.anchor, l2.direction) / denom;
    return l1.anchor + t * l1.direction;
}

Scalar angle_between(Point v, Point w, const Tolerance& tol) {
    require_finite(v, "vector");
    require_finite(w, "vector");
    const Scalar nv = norm(v), nw = norm(w);
    if (nv <= tol.eps_abs || nw <= tol.eps_abs)
        throw ZeroVector("angle of a near-zero vector is undefined");
    // atan2 keeps full precision near 0 and pi, where the clamped-arccos
    // form loses half the digits.
    return std::atan2(std::abs(cross(v, w)), dot(v, w));
}

std::optional<TangencyKind> is_tangent(const Circle& c1, const Circle& c2,
                                       const Tolerance& tol) {
    const Scalar d = distance(c1.center, c2.center);
    if (d <= tol.eps_abs) return std::nullopt;  // concentric, never tangent
    if (std::abs(d - (c1.radius + c2.radius)) <= tol.eps_abs)
        return TangencyKind::external;
    if (std::abs(d - std::abs(c1.radius - c2.radius)) <= tol.eps_abs)
        return TangencyKind::internal;
    return std::nullopt;
}

Point tangency_point(const Circle& c1, const Circle& c2, const Tolerance& tol) {
    const auto kind = is_tangent(c1, c2, tol);
    if (!kind) throw DomainError("circles are not tangent");
    const Point u = unit(c2.center - c1.center, tol);
    if (*kind == TangencyKind::external) return c1.center + c1.radius * u;
    const Scalar side = c1.radius >= c2.radius ? 1.0 : -1.0;
    return c1.center + side * c1.radius * u;
}

Scalar fourth_proportional(Scalar p, Scalar q, Scalar r, const Tolerance& tol) {
    require_finite(p, "length");
    require_finite(q, "length");
    require_finite(r, "length");
    if (p <= tol.eps_abs) throw DegenerateInput("fourth proportional needs p > 0");
    if (q <= tol.eps_abs || r <= tol.eps_abs)
        throw DegenerateInput("fourth proportional needs positive lengths");

    // Two rays from the origin at 60 degrees; p and r marked on the first,
    // q on the second. The parallel through W is built by reflecting V in
    // the midpoint of U and W (central symmetry keeps corresponding angles
    // equal), and the answer is cut off on the second ray.
    const Point o{0, 0};
    const Point dir1{1, 0};
    const Point dir2{0.5, std::sqrt(Scalar(3)) / 2};
    const Point u_mark = p * dir1;
    const Point v_mark = q * dir2;
    const Point w_mark = r * dir1;

    const Point mid = 0.5 * (u_mark + w_mark);
    const Point v_reflected = 2.0 * mid - v_mark;

    const Line parallel = make_line(w_mark, v_reflected, tol);
    const Line second_ray{o, dir2};
    const Point x = intersect(parallel, second_ray, tol);
    return distance(o, x);
}

}  // namespace gcs
