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

struct NoInscribedCircle : Error {
    explicit NoInscribedCircle(const std::string& what) : Error(what) {}
};

struct UnequalRadii : Error {
    explicit UnequalRadii(const std::string& what) : Error(what) {}
};

struct DegenerateFigure : Error {
    explicit DegenerateFigure(const std::string& what) : Error(what) {}
};

// The curvilinear triangle cut off by segment AB and two arcs: the arc of
// circle(A, a) and of circle(B, b), meeting at the apex above AB. The
// inscribed circle touches AB from above and both given circles from inside.
struct GothicFigure {
    Point a_center;
    Point b_center;
    Scalar radius_a = 1;
    Scalar radius_b = 1;
    Scalar base_length = 1;  // |AB|
    Point apex;              // upper intersection of the two circles
    Circle inscribed;
    Point tangency_on_base;  // D0, foot of the inscribed center on AB
};

// Offset of the inscribed center along AB (measured from A) and its radius.
struct GothicSolution {
    Scalar x = 0;
    Scalar rho = 0;
};

// Closed-form solution of the two internal-tangency equations
//   x^2 = a^2 - 2 a rho,   (d-x)^2 = b^2 - 2 b rho,
// eliminating x and taking the admissible quadratic root 0 < rho < min(a,b).
GothicSolution gothic_oracle(Scalar a, Scalar b, Scalar d, const Tolerance& tol = {});

// Full figure (apex, inscribed circle, tangency point) in the plane.
GothicFigure make_gothic_figure(Point a, Point b, Scalar radius_a, Scalar radius_b,
                                const Tolerance& tol = {});

struct GothicConstruction {
    GothicFigure figure;
    Trace trace;                   // of the expanded program
    ConstructionProgram expanded;  // pure compass/straightedge steps
};

// Equal-radius compass construction through the base tangency point D0.
// The expansion is pure compass/straightedge and agrees with gothic_oracle.
GothicConstruction gothic_inscribe(Point a, Point b, Scalar radius,
                                   const Tolerance& tol = {});

// Figure form; throws UnequalRadii when radius_a != radius_b (the unequal
// case is served by gothic_oracle / make_gothic_figure instead).
GothicConstruction gothic_inscribe(const GothicFigure& figure, const Tolerance& tol = {});

struct GothicFamilyEntry {
    Scalar d = 0;
    Scalar x = 0;
    Scalar rho = 0;
};

// Equal-radius sweep: rho(d) = (a^2 - d^2/4) / (2a) on [0, 2a), strictly
// decreasing from a/2 toward 0.
std::vector<GothicFamilyEntry> gothic_family(Scalar a, const std::vector<Scalar>& d_values,
                                             const Tolerance& tol = {});

// DSL macro gothic_inscribe(A, B, r=...).
void register_gothic_macros(MacroRegistry& registry);

}  // namespace gcs
