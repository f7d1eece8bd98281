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

#include <vector>

#include "gcs/construction.hpp"

namespace gcs {

struct DegenerateSegment : Error {
    explicit DegenerateSegment(const std::string& what) : Error(what) {}
};

struct StepRadiusTooSmall : Error {
    explicit StepRadiusTooSmall(const std::string& what) : Error(what) {}
};

// A proportion p1:p2:...:pm. Division points are produced at the cumulative
// fractions (p1+...+pk)/(p1+...+pm) for k < m.
struct RatioSpec {
    std::vector<long long> parts;

    static RatioSpec of(std::vector<long long> parts);  // validates
    long long total() const;
    // The m-1 interior fractions, in order.
    std::vector<Scalar> fractions() const;
};

// The nested family of circles internally tangent at A whose radii step by
// r; circle k has its center k*r along the ray and radius k*r.
struct TangentCircleFamily {
    Point tangency;
    Ray center_ray;
    Scalar step_radius = 0;
    std::vector<Circle> circles;
};

struct DivisionResult {
    std::vector<Point> points;        // interior division points, in order
    Trace trace;                      // of the expanded (primitive-only) program
    ConstructionProgram expanded;     // the primitive steps behind the macro
};

struct TangentCircleDivision : DivisionResult {
    TangentCircleFamily family;
    Point outer_center;               // center of the largest circle
};

// Transversal-and-parallels division of AB in the given ratio.
DivisionResult divide_thales(Point a, Point b, const RatioSpec& ratio,
                             const Tolerance& tol = {});

// Division by the family of circles internally tangent at A. step_radius <= 0
// selects the default |AB|; 2*n*step_radius must cover |AB|.
TangentCircleDivision divide_tangent_circles(Point a, Point b, const RatioSpec& ratio,
                                             Scalar step_radius = 0,
                                             const Tolerance& tol = {});

// Direct arithmetic a + f*(b-a); the independent check for both macros.
std::vector<Point> interpolation_oracle(Point a, Point b, const RatioSpec& ratio,
                                        const Tolerance& tol = {});

// DSL macros divide_thales / divide_circles.
void register_division_macros(MacroRegistry& registry);

}  // namespace gcs
