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

#include "gcs/construction.hpp"

namespace gcs {

struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct RadiusOutOfRange : Error {
    explicit RadiusOutOfRange(const std::string& what) : Error(what) {}
};

struct TargetOutOfInterval : Error {
    explicit TargetOutOfInterval(const std::string& what) : Error(what) {}
};

struct Infeasible : Error {
    explicit Infeasible(const std::string& what) : Error(what) {}
};

// Chain of equal circles of radius R whose centers alternate between the
// two rays of the angle alpha at the vertex. Link k (the segment from
// center k to center k+1) makes the multiple angle k*alpha with the ray
// carrying center k. Angles at the external interface are degrees; the
// chain stores radians.
struct AngleChain {
    Point vertex;
    Ray ray_a;           // carries centers 1, 3, 5, ...
    Ray ray_b;           // carries centers 2, 4, 6, ...
    Scalar alpha = 0;    // radians
    Scalar link_length = 1;
    bool degenerate = false;  // the multiplicity bound holds with equality
    std::vector<Point> centers;

    int size() const { return static_cast<int>(centers.size()); }
    const Point& center(int k) const;          // 1-based
    Point anchor_direction(int k) const;       // unit, away from the vertex
};

// The chain bound: alpha*(n-1) may not exceed 90 degrees. Exceeding it
// throws ConstraintViolated; equality sets the degenerate flag.
AngleChain build_chain(Scalar alpha_deg, Scalar link_length, int centers,
                       const Tolerance& tol = {});

// Largest n with alpha*(n-1) <= 90 degrees.
int max_multiplicity(Scalar alpha_deg);

// The multiple angle carried by link k, in degrees (equals k*alpha).
Scalar link_multiple_angle(const AngleChain& chain, int k, const Tolerance& tol = {});

// Doubles the link angle by the inscribed-angle configuration: the circle of
// half radius internally tangent to the link circle on the anchor ray sees
// the same chord under twice the angle. Returns 2*k*alpha in degrees.
Scalar double_on_link(const AngleChain& chain, int k, const Tolerance& tol = {});

// Continuous family of chains of the same multiplicity inscribed in the
// outer one, parameterized by the circle radius r in [R/2, R]. The link-k
// angle of the inscribed chain is phi_k(r) = k*alpha*R/r, interpolating
// between k*alpha at r = R and 2*k*alpha at r = R/2.
struct InnerSequence {
    Scalar alpha_deg = 0;
    Scalar link_length = 1;
    int link = 1;
    Scalar radius = 1;
};

InnerSequence inner_sequence(const AngleChain& chain, int link, Scalar radius,
                             const Tolerance& tol = {});
Scalar inner_angle(const InnerSequence& seq);

struct RadiusMatch {
    Scalar radius = 0;
    int iterations = 0;
    Scalar achieved_deg = 0;
};

// Radius r with phi_k(r) = theta, found by bisection on the monotone model
// to |phi - theta| <= 1e-10 degrees.
RadiusMatch match_inner_radius(const AngleChain& chain, int k, Scalar theta_deg,
                               const Tolerance& tol = {});

struct AngleDivision {
    Scalar result_deg = 0;
    Scalar residual_deg = 0;  // |m * result - theta|
    int iterations = 0;
    Scalar alpha_deg = 0;     // base angle of the embedding chain
    Scalar radius = 0;        // matched inner radius
};

// theta/m through the chain model: embed theta on link m of a chain whose
// base angle alpha makes theta reachable by an inner radius, match that
// radius, and read the link-1 angle. Numeric, not a compass construction.
AngleDivision divide_angle(Scalar theta_deg, int m, const Tolerance& tol = {});

// DSL macro angle_chain(alpha=..deg, R=.., n=..).
void register_chain_macros(MacroRegistry& registry);

}  // namespace gcs
