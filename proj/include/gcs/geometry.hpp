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

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcs {

// Abstract length unit. Swap for long double if more precision is needed;
// every routine below is written against Scalar only.
using Scalar = double;

constexpr Scalar kPi = 3.14159265358979323846264338327950288;

inline Scalar to_radians(Scalar degrees) { return degrees * (kPi / 180.0); }
inline Scalar to_degrees(Scalar radians) { return radians * (180.0 / kPi); }

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteInput : Error {
    explicit NonFiniteInput(const std::string& what) : Error(what) {}
};

struct ZeroVector : Error {
    explicit ZeroVector(const std::string& what) : Error(what) {}
};

struct ParallelLines : Error {
    explicit ParallelLines(const std::string& what) : Error(what) {}
};

// Circle-circle intersection of two coincident circles has no finite answer.
struct IdenticalCircles : Error {
    explicit IdenticalCircles(const std::string& what) : Error(what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// Tolerance

struct Tolerance {
    Scalar eps_abs = 1e-9;
    Scalar eps_rel = 1e-12;

    bool near(Scalar a, Scalar b) const {
        const Scalar scale = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= eps_abs + eps_rel * scale;
    }
    bool near_zero(Scalar a) const { return std::abs(a) <= eps_abs; }
};

// ---------------------------------------------------------------------------
// Primitives

struct Point {
    Scalar x = 0;
    Scalar y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Scalar s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, Scalar s) { return {s * p.x, s * p.y}; }

inline Scalar dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline Scalar norm_sq(Point p) { return dot(p, p); }
inline Scalar norm(Point p) { return std::hypot(p.x, p.y); }
inline Scalar distance(Point a, Point b) { return norm(b - a); }
inline Point perp(Point p) { return {-p.y, p.x}; }  // rotated +90 degrees

Point unit(Point p, const Tolerance& tol = {});
Point rotated(Point p, Scalar radians);

inline bool points_equal(Point a, Point b, const Tolerance& tol = {}) {
    return tol.near(a.x, b.x) && tol.near(a.y, b.y);
}

// Directed line: anchor plus unit direction.
struct Line {
    Point anchor;
    Point direction;  // unit length
};

struct Ray {
    Point origin;
    Point direction;  // unit length
};

struct Circle {
    Point center;
    Scalar radius = 1;
};

struct Segment {
    Point a;
    Point b;
};

// Validating factories. All public kernel entry points reject non-finite
// input, zero-length directions and non-positive radii.
Line make_line(Point through_a, Point through_b, const Tolerance& tol = {});
Ray make_ray(Point origin, Point through, const Tolerance& tol = {});
Circle make_circle(Point center, Scalar radius, const Tolerance& tol = {});

bool lines_equal(const Line& a, const Line& b, const Tolerance& tol = {});
bool rays_equal(const Ray& a, const Ray& b, const Tolerance& tol = {});
bool circles_equal(const Circle& a, const Circle& b, const Tolerance& tol = {});
bool segments_equal(const Segment& a, const Segment& b, const Tolerance& tol = {});

// Lexicographic point order, x before y, with tolerance-aware x comparison.
// This is the branch order every intersection routine sorts by.
bool lex_less(Point a, Point b, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Intersections
//
// Results are sorted with lex_less so the branch index picked by a
// construction is stable. Tangent configurations are snapped to a single
// point; repeated evaluation of identical inputs is bit-identical.

std::vector<Point> intersect(const Circle& c1, const Circle& c2, const Tolerance& tol = {});
std::vector<Point> intersect(const Line& l, const Circle& c, const Tolerance& tol = {});
Point intersect(const Line& l1, const Line& l2, const Tolerance& tol = {});

// Unsigned angle between two vectors, in [0, pi].
Scalar angle_between(Point v, Point w, const Tolerance& tol = {});

enum class TangencyKind { internal, external };

// Empty optional when the circles are not tangent within tol.
std::optional<TangencyKind> is_tangent(const Circle& c1, const Circle& c2,
                                       const Tolerance& tol = {});

// Point where two tangent circles touch. Precondition: is_tangent holds.
Point tangency_point(const Circle& c1, const Circle& c2, const Tolerance& tol = {});

// The length q*r/p obtained from the classical similar-triangle layout:
// p and r marked on one ray, q on the other, and a compass-built parallel
// transferring the proportion. Computed through the kernel intersection
// routines rather than by direct arithmetic.
Scalar fourth_proportional(Scalar p, Scalar q, Scalar r, const Tolerance& tol = {});

// Signed distance parameter of the projection of p onto the line.
inline Scalar line_parameter(const Line& l, Point p) { return dot(p - l.anchor, l.direction); }

inline Point foot_on_line(const Line& l, Point p) {
    return l.anchor + line_parameter(l, p) * l.direction;
}

}  // namespace gcs
