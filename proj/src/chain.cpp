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

#include "gcs/chain.hpp"

#include <cmath>

namespace gcs {

namespace {

constexpr Scalar kDegSnap = 1e-9;  // degrees

std::vector<Point> ray_circle_hits(const Ray& ray, const Circle& c, const Tolerance& tol) {
    const Line support{ray.origin, ray.direction};
    std::vector<Point> pts = intersect(support, c, tol);
    std::vector<Point> kept;
    for (Point p : pts)
        if (dot(p - ray.origin, ray.direction) >= -tol.eps_abs) kept.push_back(p);
    return kept;
}

Point next_center(const Ray& target_ray, Point current, Point previous, Scalar radius,
                  const Tolerance& tol) {
    const auto hits = ray_circle_hits(target_ray, Circle{current, radius}, tol);
    int best = -1;
    Scalar best_dist = -1;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const Scalar d = distance(hits[i], previous);
        if (d > best_dist) {
            best_dist = d;
            best = static_cast<int>(i);
        }
    }
    if (best < 0 || best_dist <= tol.eps_abs)
        throw ConstraintViolated("chain cannot be extended: the next center coincides "
                                 "with the previous one");
    return hits[static_cast<std::size_t>(best)];
}

}  // namespace

const Point& AngleChain::center(int k) const {
    if (k < 1 || k > size()) throw IndexOutOfRange("no chain center " + std::to_string(k));
    return centers[static_cast<std::size_t>(k - 1)];
}

Point AngleChain::anchor_direction(int k) const {
    if (k < 1 || k > size()) throw IndexOutOfRange("no chain center " + std::to_string(k));
    return (k % 2 == 1) ? ray_a.direction : ray_b.direction;
}

AngleChain build_chain(Scalar alpha_deg, Scalar link_length, int centers,
                       const Tolerance& tol) {
    if (!std::isfinite(alpha_deg) || alpha_deg <= 0)
        throw DomainError("chain angle must be positive");
    if (!std::isfinite(link_length) || link_length <= tol.eps_abs)
        throw DomainError("chain link length must be positive");
    if (centers < 2) throw DomainError("a chain needs at least two centers");

    const Scalar bound = alpha_deg * static_cast<Scalar>(centers - 1);
    if (bound > 90 + kDegSnap)
        throw ConstraintViolated("alpha*(n-1) = " + format_scalar(bound) +
                                 " degrees exceeds the 90 degree chain bound");

    AngleChain chain;
    chain.alpha = to_radians(alpha_deg);
    chain.link_length = link_length;
    chain.degenerate = std::abs(bound - 90) <= kDegSnap;
    chain.vertex = Point{0, 0};
    chain.ray_a = Ray{chain.vertex, Point{1, 0}};
    chain.ray_b = Ray{chain.vertex, Point{std::cos(chain.alpha), std::sin(chain.alpha)}};

    chain.centers.push_back(chain.vertex);
    // Second center: on ray B at one link length from the vertex.
    const auto first = ray_circle_hits(chain.ray_b, Circle{chain.vertex, link_length}, tol);
    if (first.empty()) throw ConstraintViolated("chain start failed");
    chain.centers.push_back(first.front());

    for (int k = 2; k < centers; ++k) {
        const Ray& target = (k % 2 == 0) ? chain.ray_a : chain.ray_b;
        chain.centers.push_back(next_center(target, chain.centers[k - 1],
                                            chain.centers[k - 2], link_length, tol));
    }
    return chain;
}

int max_multiplicity(Scalar alpha_deg) {
    if (!std::isfinite(alpha_deg) || alpha_deg <= 0)
        throw DomainError("angle must be positive");
    // Snap so that an exact multiple of 90/alpha lands on the boundary.
    return static_cast<int>(std::floor((90 + kDegSnap) / alpha_deg)) + 1;
}

Scalar link_multiple_angle(const AngleChain& chain, int k, const Tolerance& tol) {
    if (k < 1 || k >= chain.size())
        throw IndexOutOfRange("chain has no link " + std::to_string(k));
    const Point v = chain.center(k + 1) - chain.center(k);
    return to_degrees(angle_between(v, chain.anchor_direction(k), tol));
}

Scalar double_on_link(const AngleChain& chain, int k, const Tolerance& tol) {
    if (k < 1 || k >= chain.size())
        throw IndexOutOfRange("chain has no link " + std::to_string(k));
    const Scalar doubled = 2 * to_degrees(chain.alpha) * static_cast<Scalar>(k);
    if (doubled >= 180 - kDegSnap)
        throw OutOfRange("doubled angle reaches a straight angle");

    const Point v = chain.center(k);
    const Point anchor = chain.anchor_direction(k);
    const Scalar r = chain.link_length;

    // Half-radius circle internally tangent to the link circle at the anchor
    // point; the vertex lies on it, so the link ray cuts it again at the
    // chord point seen from its center under the doubled angle.
    const Point touch = v + r * anchor;           // on the anchor ray
    const Point half_center = v + (r / 2) * anchor;
    const Circle half{half_center, r / 2};
    const Ray link_ray = make_ray(v, chain.center(k + 1), tol);

    const auto hits = ray_circle_hits(link_ray, half, tol);
    int best = -1;
    Scalar best_dist = -1;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const Scalar d = distance(hits[i], v);
        if (d > best_dist) {
            best_dist = d;
            best = static_cast<int>(i);
        }
    }
    if (best < 0 || best_dist <= tol.eps_abs)
        throw OutOfRange("link ray is tangent to the half-radius circle");
    const Point chord_point = hits[static_cast<std::size_t>(best)];

    return to_degrees(angle_between(chord_point - half_center, touch - half_center, tol));
}

InnerSequence inner_sequence(const AngleChain& chain, int link, Scalar radius,
                             const Tolerance& tol) {
    if (link < 1 || link >= chain.size())
        throw IndexOutOfRange("chain has no link " + std::to_string(link));
    const Scalar r_lo = chain.link_length / 2;
    const Scalar r_hi = chain.link_length;
    if (radius < r_lo - tol.eps_abs || radius > r_hi + tol.eps_abs)
        throw RadiusOutOfRange("inner radius must lie in [R/2, R]");
    InnerSequence seq;
    seq.alpha_deg = to_degrees(chain.alpha);
    seq.link_length = chain.link_length;
    seq.link = link;
    seq.radius = std::clamp(radius, r_lo, r_hi);
    return seq;
}

Scalar inner_angle(const InnerSequence& seq) {
    return static_cast<Scalar>(seq.link) * seq.alpha_deg * seq.link_length / seq.radius;
}

RadiusMatch match_inner_radius(const AngleChain& chain, int k, Scalar theta_deg,
                               const Tolerance& tol) {
    if (k < 1 || k >= chain.size())
        throw IndexOutOfRange("chain has no link " + std::to_string(k));
    const Scalar alpha_deg = to_degrees(chain.alpha);
    const Scalar lo_angle = static_cast<Scalar>(k) * alpha_deg;        // at r = R
    const Scalar hi_angle = 2 * lo_angle;                              // at r = R/2
    if (theta_deg < lo_angle - kDegSnap || theta_deg > hi_angle + kDegSnap)
        throw TargetOutOfInterval("target angle " + format_scalar(theta_deg) +
                                  " outside [" + format_scalar(lo_angle) + ", " +
                                  format_scalar(hi_angle) + "] degrees");

    const Scalar r_max = chain.link_length;
    const Scalar r_min = r_max / 2;
    // An order tighter than the promised 1e-10 degrees, so callers that
    // re-multiply the result keep their own bound with room to spare.
    constexpr Scalar kGoal = 1e-12;
    constexpr int kMaxIter = 60;

    // Targets snapped just past an endpoint are pulled onto it.
    const Scalar target = std::clamp(theta_deg, lo_angle, hi_angle);

    auto phi = [&](Scalar r) { return inner_angle(inner_sequence(chain, k, r, tol)); };

    RadiusMatch match;
    if (std::abs(phi(r_max) - target) <= kGoal) {
        match.radius = r_max;
        match.achieved_deg = phi(r_max);
        return match;
    }
    if (std::abs(phi(r_min) - target) <= kGoal) {
        match.radius = r_min;
        match.achieved_deg = phi(r_min);
        return match;
    }

    Scalar lo = r_min, hi = r_max;  // phi(lo) >= target >= phi(hi), phi decreasing
    for (int i = 1; i <= kMaxIter; ++i) {
        const Scalar mid = 0.5 * (lo + hi);
        const Scalar val = phi(mid);
        match.iterations = i;
        if (std::abs(val - target) <= kGoal) {
            match.radius = mid;
            match.achieved_deg = val;
            return match;
        }
        if (val > target) lo = mid;
        else hi = mid;
    }
    throw Error("inner radius bisection did not converge in 60 iterations");
}

AngleDivision divide_angle(Scalar theta_deg, int m, const Tolerance& tol) {
    if (!std::isfinite(theta_deg) || theta_deg <= 0 || theta_deg >= 180)
        throw DomainError("angle to divide must lie strictly between 0 and 180 degrees");
    if (m < 2) throw DomainError("division order must be at least 2");

    // The embedding chain must carry link m, so alpha*m <= 90 is required
    // while the inner interval [m*alpha, 2*m*alpha] must contain theta.
    // Any alpha in [theta/(2m), min(theta, 90)/m] works; take the midpoint.
    const Scalar lo = theta_deg / (2 * static_cast<Scalar>(m));
    const Scalar hi = std::min<Scalar>(theta_deg, 90) / static_cast<Scalar>(m);
    if (hi < lo)
        throw Infeasible("no chain angle can reach " + format_scalar(theta_deg) +
                         " degrees on link " + std::to_string(m));
    const Scalar alpha_deg = 0.5 * (lo + hi);

    const AngleChain chain = build_chain(alpha_deg, 1.0, m + 1, tol);
    const RadiusMatch match = match_inner_radius(chain, m, theta_deg, tol);

    AngleDivision out;
    out.alpha_deg = alpha_deg;
    out.radius = match.radius;
    out.iterations = match.iterations;
    out.result_deg = inner_angle(inner_sequence(chain, 1, match.radius, tol));
    out.residual_deg = std::abs(static_cast<Scalar>(m) * out.result_deg - theta_deg);
    return out;
}

// ---------------------------------------------------------------------------
// DSL macro

namespace {

void expand_angle_chain(const Step& call, StepBuilder& b) {
    Scalar alpha_deg = -1, link = -1, n_value = -1;
    for (const MacroArg& arg : call.macro_args) {
        if (arg.key == "alpha" && arg.kind == MacroArg::Kind::angle_deg) alpha_deg = arg.number;
        else if (arg.key == "alpha" && arg.kind == MacroArg::Kind::number) alpha_deg = arg.number;
        else if (arg.key == "R") link = arg.number;
        else if (arg.key == "n") n_value = arg.number;
    }
    if (alpha_deg <= 0 || link <= 0 || n_value < 2 ||
        n_value != std::floor(n_value))
        throw StepFailure(call.id,
                          "angle_chain expects alpha=<deg>, R=<len>, n=<int >= 2>");
    const int n = static_cast<int>(n_value);

    const Scalar bound = alpha_deg * static_cast<Scalar>(n - 1);
    if (bound > 90 + kDegSnap)
        throw ConstraintViolated("alpha*(n-1) = " + format_scalar(bound) +
                                 " degrees exceeds the 90 degree chain bound");

    const Scalar alpha = to_radians(alpha_deg);
    const std::string& id = b.macro_id();

    // Given data: the vertex, the two ray directions, and the link length
    // marked on ray A.
    const std::string c1 = b.free_point(id + "_1", Point{0, 0});
    const std::string r_mark = b.free_point(b.fresh("rmark"), Point{link, 0});
    const std::string b_dir =
        b.free_point(b.fresh("bdir"), Point{std::cos(alpha), std::sin(alpha)});
    const std::string ray_a = b.ray(id + "_rayA", c1, r_mark);
    const std::string ray_b = b.ray(id + "_rayB", c1, b_dir);

    // First circle and second center.
    std::vector<std::string> centers = {c1};
    const std::string c1_circle = b.circle(b.fresh("k"), c1, r_mark);
    centers.push_back(b.intersect(id + "_2", c1_circle, ray_b, 0));

    for (int k = 2; k < n; ++k) {
        const std::string& ray = (k % 2 == 0) ? ray_a : ray_b;
        const std::string circ = b.circle(b.fresh("k"), centers[k - 1], centers[k - 2]);
        centers.push_back(b.intersect_excluding(id + "_" + std::to_string(k + 1), circ, ray,
                                                b.point_at(centers[k - 2])));
    }
    // Last link circle completes the figure.
    b.circle(b.fresh("k"), centers.back(), centers[centers.size() - 2]);

    // Principal handle: the vertex.
    b.free_point(id, Point{0, 0});
}

}  // namespace

void register_chain_macros(MacroRegistry& registry) {
    registry.add("angle_chain", ObjectKind::point, expand_angle_chain);
}

}  // namespace gcs
