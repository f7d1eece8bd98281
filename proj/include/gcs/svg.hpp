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

#include <string>
#include <variant>
#include <vector>

#include "gcs/construction.hpp"

namespace gcs {

struct EmptyTrace : Error {
    explicit EmptyTrace(const std::string& what) : Error(what) {}
};

// Circular arc for figure presets; angles are radians, counterclockwise
// from start to end.
struct Arc {
    Point center;
    Scalar radius = 1;
    Scalar start = 0;
    Scalar end = kPi;
};

using SceneObject = std::variant<Point, Segment, Line, Ray, Circle, Arc>;

enum class PlotClass { given, auxiliary, result };

struct SceneItem {
    std::string id;
    SceneObject object;
    PlotClass cls = PlotClass::result;
};

struct Style {
    Scalar stroke_width = 1.5;
    Scalar target_size = 480;  // pixels across the longer bounding-box side
    Scalar margin = 24;
    bool flip_y = true;        // mathematical orientation
};

// Deterministic SVG: fixed 6-decimal coordinates, elements in scene order,
// viewBox from the scaled bounding box plus margin, point dots as r=2
// circles. No timestamps, no randomness; equal inputs give equal bytes.
std::string render_scene(const std::vector<SceneItem>& scene, const Style& style = {});

// Renders every trace object in trace order. Ids created by macro internals
// are drawn as auxiliary, everything else as result.
std::string render_trace(const Trace& trace, const Style& style = {});

// The world -> pixel map used by the renderer, exposed so tests can invert
// rendered coordinates.
struct ViewTransform {
    Scalar scale = 1;
    Scalar offset_x = 0;
    Scalar offset_y = 0;
    Scalar height = 0;
    bool flip_y = true;

    Point to_screen(Point world) const;
    Point to_world(Point screen) const;
};

ViewTransform view_transform(const std::vector<SceneItem>& scene, const Style& style = {});

}  // namespace gcs
