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

#include "gcs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gcs {

namespace {

struct Bounds {
    Scalar min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any = false;

    void add(Point p) {
        if (!any) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            any = true;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

Bounds scene_bounds(const std::vector<SceneItem>& scene) {
    Bounds b;
    for (const SceneItem& item : scene) {
        std::visit(
            [&](const auto& obj) {
                using T = std::decay_t<decltype(obj)>;
                if constexpr (std::is_same_v<T, Point>) {
                    b.add(obj);
                } else if constexpr (std::is_same_v<T, Segment>) {
                    b.add(obj.a);
                    b.add(obj.b);
                } else if constexpr (std::is_same_v<T, Line>) {
                    b.add(obj.anchor);
                } else if constexpr (std::is_same_v<T, Ray>) {
                    b.add(obj.origin);
                } else if constexpr (std::is_same_v<T, Circle>) {
                    b.add(obj.center + Point{obj.radius, obj.radius});
                    b.add(obj.center - Point{obj.radius, obj.radius});
                } else if constexpr (std::is_same_v<T, Arc>) {
                    b.add(obj.center + Point{obj.radius, obj.radius});
                    b.add(obj.center - Point{obj.radius, obj.radius});
                }
            },
            item.object);
    }
    return b;
}

std::string fixed6(Scalar v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(v));
    // Avoid the "-0.000000" artifact so equal inputs render equal bytes.
    if (std::string_view(buf) == "-0.000000") return "0.000000";
    return buf;
}

const char* class_name(PlotClass c) {
    switch (c) {
        case PlotClass::given: return "given";
        case PlotClass::auxiliary: return "auxiliary";
        case PlotClass::result: return "result";
    }
    return "result";
}

// given = red, auxiliary = gray dashed, result = bold black.
std::string class_style(PlotClass c, const Style& style) {
    switch (c) {
        case PlotClass::given:
            return "stroke=\"#c62828\" fill=\"none\"";
        case PlotClass::auxiliary:
            return "stroke=\"#9e9e9e\" fill=\"none\" stroke-dasharray=\"5 4\"";
        case PlotClass::result:
            return "stroke=\"#111111\" fill=\"none\" stroke-width=\"" +
                   fixed6(1.6 * style.stroke_width) + "\"";
    }
    return "";
}

const char* dot_fill(PlotClass c) {
    switch (c) {
        case PlotClass::given: return "#c62828";
        case PlotClass::auxiliary: return "#9e9e9e";
        case PlotClass::result: return "#111111";
    }
    return "#111111";
}

// Chops an infinite line to the world-coordinate view rectangle.
std::optional<Segment> clip_line(const Line& l, Scalar x0, Scalar y0, Scalar x1, Scalar y1,
                                 bool ray_only) {
    Scalar t_min = ray_only ? 0 : -std::numeric_limits<Scalar>::infinity();
    Scalar t_max = std::numeric_limits<Scalar>::infinity();
    const Scalar p[4] = {-l.direction.x, l.direction.x, -l.direction.y, l.direction.y};
    const Scalar q[4] = {l.anchor.x - x0, x1 - l.anchor.x, l.anchor.y - y0, y1 - l.anchor.y};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(p[i]) < 1e-15) {
            if (q[i] < 0) return std::nullopt;
            continue;
        }
        const Scalar t = q[i] / p[i];
        if (p[i] < 0) t_min = std::max(t_min, t);
        else t_max = std::min(t_max, t);
    }
    if (t_min > t_max) return std::nullopt;
    return Segment{l.anchor + t_min * l.direction, l.anchor + t_max * l.direction};
}

}  // namespace

Point ViewTransform::to_screen(Point world) const {
    const Scalar sx = offset_x + world.x * scale;
    const Scalar sy = offset_y + world.y * scale;
    return {sx, flip_y ? height - sy : sy};
}

Point ViewTransform::to_world(Point screen) const {
    const Scalar sy = flip_y ? height - screen.y : screen.y;
    return {(screen.x - offset_x) / scale, (sy - offset_y) / scale};
}

ViewTransform view_transform(const std::vector<SceneItem>& scene, const Style& style) {
    Bounds b = scene_bounds(scene);
    if (!b.any) throw EmptyTrace("nothing to render");

    const Scalar span = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    ViewTransform t;
    t.scale = span > 1e-12 ? style.target_size / span : 1;
    t.flip_y = style.flip_y;
    t.offset_x = style.margin - b.min_x * t.scale;
    t.offset_y = style.margin - b.min_y * t.scale;
    t.height = (b.max_y - b.min_y) * t.scale + 2 * style.margin;
    return t;
}

std::string render_scene(const std::vector<SceneItem>& scene, const Style& style) {
    if (scene.empty()) throw EmptyTrace("nothing to render");
    const Bounds b = scene_bounds(scene);
    const ViewTransform t = view_transform(scene, style);

    const Scalar width = (b.max_x - b.min_x) * t.scale + 2 * style.margin;
    const Scalar height = t.height;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fixed6(width) + "\" height=\"" + fixed6(height) + "\" viewBox=\"0 0 " +
           fixed6(width) + " " + fixed6(height) + "\">\n";
    out += "<g stroke-width=\"" + fixed6(style.stroke_width) + "\" stroke-linecap=\"round\">\n";

    // View rectangle in world coordinates, for clipping unbounded objects.
    const Scalar margin_world = style.margin / t.scale;
    const Scalar wx0 = b.min_x - margin_world, wx1 = b.max_x + margin_world;
    const Scalar wy0 = b.min_y - margin_world, wy1 = b.max_y + margin_world;

    auto line_element = [&](Point a, Point bpt, PlotClass cls, const std::string& id) {
        const Point s1 = t.to_screen(a);
        const Point s2 = t.to_screen(bpt);
        out += "<line class=\"" + std::string(class_name(cls)) + "\" data-id=\"" + id +
               "\" " + class_style(cls, style) + " x1=\"" + fixed6(s1.x) + "\" y1=\"" +
               fixed6(s1.y) + "\" x2=\"" + fixed6(s2.x) + "\" y2=\"" + fixed6(s2.y) +
               "\"/>\n";
    };

    for (const SceneItem& item : scene) {
        const PlotClass cls = item.cls;
        std::visit(
            [&](const auto& obj) {
                using T = std::decay_t<decltype(obj)>;
                if constexpr (std::is_same_v<T, Point>) {
                    const Point s = t.to_screen(obj);
                    out += "<circle class=\"point " + std::string(class_name(cls)) +
                           "\" data-id=\"" + item.id + "\" fill=\"" + dot_fill(cls) +
                           "\" stroke=\"none\" cx=\"" + fixed6(s.x) + "\" cy=\"" +
                           fixed6(s.y) + "\" r=\"2\"/>\n";
                } else if constexpr (std::is_same_v<T, Segment>) {
                    line_element(obj.a, obj.b, cls, item.id);
                } else if constexpr (std::is_same_v<T, Line>) {
                    if (auto seg = clip_line(obj, wx0, wy0, wx1, wy1, false))
                        line_element(seg->a, seg->b, cls, item.id);
                } else if constexpr (std::is_same_v<T, Ray>) {
                    if (auto seg = clip_line(Line{obj.origin, obj.direction}, wx0, wy0, wx1,
                                             wy1, true))
                        line_element(seg->a, seg->b, cls, item.id);
                } else if constexpr (std::is_same_v<T, Circle>) {
                    const Point c = t.to_screen(obj.center);
                    out += "<circle class=\"" + std::string(class_name(cls)) +
                           "\" data-id=\"" + item.id + "\" " + class_style(cls, style) +
                           " cx=\"" + fixed6(c.x) + "\" cy=\"" + fixed6(c.y) + "\" r=\"" +
                           fixed6(obj.radius * t.scale) + "\"/>\n";
                } else if constexpr (std::is_same_v<T, Arc>) {
                    const Point p0 = t.to_screen(
                        obj.center + obj.radius * Point{std::cos(obj.start),
                                                        std::sin(obj.start)});
                    const Point p1 = t.to_screen(
                        obj.center +
                        obj.radius * Point{std::cos(obj.end), std::sin(obj.end)});
                    const Scalar sweep = obj.end - obj.start;
                    const char* large = std::abs(sweep) > kPi ? "1" : "0";
                    // Counterclockwise in world turns clockwise on a flipped
                    // canvas.
                    const char* dir = (sweep > 0) == style.flip_y ? "0" : "1";
                    out += "<path class=\"" + std::string(class_name(cls)) +
                           "\" data-id=\"" + item.id + "\" " + class_style(cls, style) +
                           " d=\"M " + fixed6(p0.x) + " " + fixed6(p0.y) + " A " +
                           fixed6(obj.radius * t.scale) + " " +
                           fixed6(obj.radius * t.scale) + " 0 " + large + " " + dir + " " +
                           fixed6(p1.x) + " " + fixed6(p1.y) + "\"/>\n";
                }
            },
            item.object);
    }

    out += "</g>\n</svg>\n";
    return out;
}

std::string render_trace(const Trace& trace, const Style& style) {
    if (trace.objects.empty()) throw EmptyTrace("trace has no objects");
    std::vector<SceneItem> scene;
    scene.reserve(trace.objects.size());
    for (const auto& [id, obj] : trace.objects) {
        SceneItem item;
        item.id = id;
        item.cls = id.find("__") != std::string::npos ? PlotClass::auxiliary
                                                      : PlotClass::result;
        std::visit([&](const auto& o) { item.object = o; }, obj);
        scene.push_back(std::move(item));
    }
    return render_scene(scene, style);
}

}  // namespace gcs
