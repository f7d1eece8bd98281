// Acceptance suite: one pass/fail line per criterion, timed, exit code 0
// only when every criterion holds at its stated tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcs/chain.hpp"
#include "gcs/division.hpp"
#include "gcs/dsl.hpp"
#include "gcs/gothic.hpp"
#include "gcs/presets.hpp"
#include "gcs/svg.hpp"
#include "gothic_reference.hpp"

using namespace gcs;

namespace {

const Tolerance tol;

class Criterion {
  public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void require(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = what;
        if (!ok) ++failures_;
    }

    void within(Scalar value, Scalar bound, const std::string& what) {
        std::ostringstream msg;
        msg << what << " (|" << value << "| > " << bound << ")";
        require(std::abs(value) <= bound, msg.str());
    }

    bool passed() const { return failures_ == 0; }
    const std::string& name() const { return name_; }
    int checks() const { return checks_; }
    const std::string& first_failure() const { return first_failure_; }

  private:
    std::string name_;
    int checks_ = 0;
    int failures_ = 0;
    std::string first_failure_;
};

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

// ---------------------------------------------------------------------------
// 1. Closed-form inscribed circle, semicircle limit, unequal radii against
//    both the quadratic oracle and the brute-force grid solver.

void criterion_gothic(Criterion& c) {
    const auto unit = gothic_inscribe({0, 0}, {1, 0}, 1, tol);
    c.within(unit.figure.inscribed.center.x - 0.5, 1e-9, "unit center offset");
    c.within(unit.figure.inscribed.center.y - 0.375, 1e-9, "unit center height");
    c.within(unit.figure.inscribed.radius - 0.375, 1e-9, "unit radius");

    const auto semicircle = gothic_oracle(1, 1, 0, tol);
    c.within(semicircle.rho - 0.5, 1e-9, "semicircle limit radius");

    const Scalar a = 1, b = 0.8, d = 1;
    const auto quad = gothic_oracle(a, b, d, tol);
    c.within(quad.x * quad.x - (a * a - 2 * a * quad.rho), 1e-6,
             "asymmetric tangency residual at A (quadratic)");
    c.within((d - quad.x) * (d - quad.x) - (b * b - 2 * b * quad.rho), 1e-6,
             "asymmetric tangency residual at B (quadratic)");

    const auto brute = gcs_test::brute_force_gothic(a, b, d);
    c.within(brute.x * brute.x - (a * a - 2 * a * brute.rho), 1e-6,
             "asymmetric tangency residual at A (brute force)");
    c.within((d - brute.x) * (d - brute.x) - (b * b - 2 * b * brute.rho), 1e-6,
             "asymmetric tangency residual at B (brute force)");
    c.within(quad.x - brute.x, 1e-6, "oracle agreement on x");
    c.within(quad.rho - brute.rho, 1e-6, "oracle agreement on rho");
}

// ---------------------------------------------------------------------------
// 2. Both segment divisions against the interpolation oracle, with pure
//    compass/straightedge expansions, over 1000 random cases.

void criterion_division(Criterion& c) {
    std::mt19937 rng(260808);
    std::uniform_real_distribution<double> coord(-5, 5);
    std::uniform_int_distribution<int> m_dist(2, 5);
    std::uniform_int_distribution<long long> part(1, 4);

    for (int i = 0; i < 1000; ++i) {
        const Point a{coord(rng), coord(rng)};
        Point b{coord(rng), coord(rng)};
        if (distance(a, b) < 0.1) b.x += 1;

        std::vector<long long> parts;
        long long total;
        do {
            parts.assign(static_cast<std::size_t>(m_dist(rng)), 1);
            total = 0;
            for (auto& p : parts) {
                p = part(rng);
                total += p;
            }
        } while (total > 12);
        const RatioSpec ratio = RatioSpec::of(parts);

        const auto expected = interpolation_oracle(a, b, ratio, tol);
        const auto thales = divide_thales(a, b, ratio, tol);
        const auto rings = divide_tangent_circles(a, b, ratio, 0, tol);

        Scalar worst = 0;
        for (std::size_t k = 0; k < expected.size(); ++k) {
            worst = std::max(worst, distance(thales.points[k], expected[k]));
            worst = std::max(worst, distance(rings.points[k], expected[k]));
        }
        c.within(worst, 1e-9, "division agreement");
        c.require(thales.trace.pure_compass_straightedge(),
                  "transversal trace not pure compass/straightedge");
        c.require(rings.trace.pure_compass_straightedge(),
                  "tangent-circle trace not pure compass/straightedge");
    }
}

// ---------------------------------------------------------------------------
// 3. Chain angle laws over 1000 random chains plus exact multiplicities.

void criterion_chain_formulas(Criterion& c) {
    std::mt19937 rng(112358);
    std::uniform_real_distribution<double> alpha_dist(0.6, 44);

    for (int i = 0; i < 1000; ++i) {
        const Scalar alpha = alpha_dist(rng);
        const int n_max = max_multiplicity(alpha);
        std::uniform_int_distribution<int> n_dist(2, std::min(n_max, 40));
        const int n = n_dist(rng);
        const AngleChain chain = build_chain(alpha, 1, n, tol);

        Scalar worst_interior = 0, worst_multiple = 0;
        for (int k = 2; k < n; ++k) {
            const Scalar interior =
                to_degrees(angle_between(chain.center(k - 1) - chain.center(k),
                                         chain.center(k + 1) - chain.center(k), tol));
            worst_interior =
                std::max(worst_interior, std::abs(interior - (180 - 2 * (k - 1) * alpha)));
        }
        for (int k = 1; k < n; ++k)
            worst_multiple = std::max(
                worst_multiple, std::abs(link_multiple_angle(chain, k, tol) - k * alpha));
        c.within(worst_interior, 1e-9, "interior angle law");
        c.within(worst_multiple, 1e-9, "link multiple law");
    }

    c.require(max_multiplicity(30) == 4, "max multiplicity at 30 degrees");
    c.require(max_multiplicity(10) == 10, "max multiplicity at 10 degrees");
}

// ---------------------------------------------------------------------------
// 4. The multiplicity bound rejects 45x4 and accepts 30x4 with the flag.

void criterion_bound(Criterion& c) {
    bool rejected = false;
    try {
        build_chain(45, 1, 4, tol);
    } catch (const ConstraintViolated&) {
        rejected = true;
    }
    c.require(rejected, "45 degrees with four centers must be rejected");

    const AngleChain chain = build_chain(30, 1, 4, tol);
    c.require(chain.size() == 4, "30 degrees with four centers must build");
    c.require(chain.degenerate, "boundary chain must carry the degeneracy flag");
}

// ---------------------------------------------------------------------------
// 5. Doubling is exact and the inner proportion holds at every radius.

void criterion_doubling(Criterion& c) {
    std::mt19937 rng(571113);
    std::uniform_real_distribution<double> alpha_dist(2, 40);
    std::uniform_real_distribution<double> r_dist(0.5, 1.0);

    for (int i = 0; i < 200; ++i) {
        const Scalar alpha = alpha_dist(rng);
        const int n_max = max_multiplicity(alpha);
        std::uniform_int_distribution<int> n_dist(3, std::max(3, std::min(n_max, 9)));
        const int n = n_dist(rng);
        if (n > n_max) continue;
        const AngleChain chain = build_chain(alpha, 1, n, tol);

        std::uniform_int_distribution<int> k_dist(1, n - 1);
        const int k = k_dist(rng);
        if (2 * k * alpha < 179.5) {
            const Scalar doubled = double_on_link(chain, k, tol);
            const Scalar link = link_multiple_angle(chain, k, tol);
            c.within((doubled - 2 * link) / doubled, 1e-12, "doubling exactness");
        }

        std::uniform_int_distribution<int> k2_dist(2, n - 1);
        const int k2 = k2_dist(rng);
        const Scalar r = r_dist(rng);
        const Scalar phi_k = inner_angle(inner_sequence(chain, k2, r, tol));
        const Scalar phi_k1 = inner_angle(inner_sequence(chain, k2 - 1, r, tol));
        const Scalar want = static_cast<Scalar>(k2) / static_cast<Scalar>(k2 - 1);
        c.within(phi_k / phi_k1 / want - 1, 1e-12, "inner proportion");
    }

    // The worked case: a 20 degree chain, 75 degrees on the third link.
    const AngleChain chain = build_chain(20, 1, 5, tol);
    const auto match = match_inner_radius(chain, 3, 75, tol);
    const Scalar second = inner_angle(inner_sequence(chain, 2, match.radius, tol));
    c.within(second - 50, 1e-9, "worked case second link angle");
    c.within(75.0 / second - 1.5, 1e-10, "worked case 3:2 proportion");
}

// ---------------------------------------------------------------------------
// 6. Angle division round trip at 1e-10 degrees in at most 60 iterations.

void criterion_angle_division(Criterion& c) {
    std::mt19937 rng(1723);
    std::uniform_real_distribution<double> theta_dist(0.5, 170);
    std::uniform_int_distribution<int> m_dist(2, 9);

    for (int i = 0; i < 500; ++i) {
        const Scalar theta = theta_dist(rng);
        const int m = m_dist(rng);
        const auto result = divide_angle(theta, m, tol);
        c.within(m * result.result_deg - theta, 1e-10, "division round trip");
        c.require(result.iterations <= 60, "bisection iteration budget");
    }
}

// ---------------------------------------------------------------------------
// 7. Script round trips and error locations.

void criterion_dsl(Criterion& c) {
    // Generated programs: every statement form, random numerics.
    std::mt19937 rng(987123);
    std::uniform_real_distribution<double> coord(-20, 20);
    for (int i = 0; i < 100; ++i) {
        std::string source;
        int serial = 0;
        std::vector<std::string> points;
        auto add_point = [&] {
            const std::string id = "p" + std::to_string(serial++);
            source += "point " + id + " = (" + format_scalar(coord(rng)) + ", " +
                      format_scalar(coord(rng)) + ")\n";
            points.push_back(id);
        };
        add_point();
        add_point();
        add_point();
        source += "line l0 = line(" + points[0] + ", " + points[1] + ")\n";
        source += "ray r0 = ray(" + points[0] + ", " + points[2] + ")\n";
        source += "circle c0 = circle(" + points[0] + ", " + points[1] + ")\n";
        source += "circle c1 = circle(" + points[1] + ", r=" +
                  format_scalar(std::abs(coord(rng)) + 0.5) + ")\n";
        source += "point q0 = intersect(c0, c1, 1)\n";
        source += "point q1 = midpoint(" + points[1] + ", " + points[2] + ")\n";
        source += "line l1 = perp(l0, at=" + points[2] + ")\n";
        source += "line l2 = bisector(" + points[0] + ", " + points[2] + ")\n";
        source += "point q2 = macro divide_thales(" + points[0] + ", " + points[1] +
                  ", 1:2:3)\n";

        const ConstructionProgram p = parse(source);
        const ConstructionProgram back = parse(format(p));
        c.require(structurally_equal(p, back), "generated program round trip");
    }

    for (const std::string& name : preset_names()) {
        const Preset& p = preset(name);
        c.require(structurally_equal(p.program, parse(format(p.program), name)),
                  "preset round trip: " + name);
    }

    const std::vector<std::string> bad = {
        "point A = (0 0)",
        "point A (0, 0)",
        "point A = 0, 0)",
        "point A = (3..5, 0)",
        "point A = (1, 2km)",
        "line l = wedge(A, B)",
        "point A = (0, 0) trailing",
    };
    for (const std::string& source : bad) {
        try {
            parse(source);
            c.require(false, "fixture must not parse: " + source);
        } catch (const ParseError& e) {
            c.require(e.line == 1, "fixture error line");
            c.require(e.column >= 1 && e.column <= static_cast<int>(source.size()),
                      "fixture error column in bounds");
        }
    }
}

// ---------------------------------------------------------------------------
// 8. Deterministic rendering with the documented element counts.

void criterion_render(Criterion& c) {
    for (const std::string& name : preset_names()) {
        const std::string svg1 = render_scene(preset_scene(preset(name), tol), Style{});
        const std::string svg2 = render_scene(preset_scene(preset(name), tol), Style{});
        c.require(svg1 == svg2, "render determinism: " + name);
    }

    const std::string gothic = render_scene(preset_scene(preset("gothic-unit"), tol),
                                            Style{});
    c.require(count_occurrences(gothic, "<circle") == 3, "gothic-unit circle count");
    c.require(count_occurrences(gothic, "<line") == 1, "gothic-unit line count");

    const std::string chain = render_scene(preset_scene(preset("chain-30-4"), tol),
                                           Style{});
    c.require(count_occurrences(chain, "<circle") == 4, "chain marker count");
    c.require(count_occurrences(chain, "<line") == 3, "chain segment count");
}

struct Entry {
    int number;
    const char* name;
    double budget_seconds;
    std::function<void(Criterion&)> body;
};

}  // namespace

int main() {
    const std::vector<Entry> entries = {
        {1, "gothic-closed-form", 1.0, criterion_gothic},
        {2, "segment-division-equivalence", 10.0, criterion_division},
        {3, "chain-angle-formulas", 5.0, criterion_chain_formulas},
        {4, "multiplicity-bound-enforcement", 5.0, criterion_bound},
        {5, "doubling-and-inner-proportion", 5.0, criterion_doubling},
        {6, "angle-division-round-trip", 5.0, criterion_angle_division},
        {7, "script-round-trip-and-errors", 5.0, criterion_dsl},
        {8, "render-determinism-and-counts", 5.0, criterion_render},
    };

    std::printf("acceptance: %zu criteria + total-runtime budget\n", entries.size());
    const auto suite_start = std::chrono::steady_clock::now();
    int failed = 0;

    for (const Entry& entry : entries) {
        Criterion criterion(entry.name);
        const auto start = std::chrono::steady_clock::now();
        std::string blowup;
        try {
            entry.body(criterion);
        } catch (const std::exception& e) {
            blowup = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();

        const bool in_budget = seconds < entry.budget_seconds;
        const bool ok = criterion.passed() && blowup.empty() && in_budget;
        if (!ok) ++failed;
        std::printf("%s %d %-32s %7.3f s  (%d checks, budget %.0f s)\n",
                    ok ? "PASS" : "FAIL", entry.number, entry.name, seconds,
                    criterion.checks(), entry.budget_seconds);
        if (!blowup.empty()) std::printf("       unexpected exception: %s\n", blowup.c_str());
        if (!criterion.passed())
            std::printf("       first failure: %s\n", criterion.first_failure().c_str());
        if (!in_budget) std::printf("       over time budget\n");
    }

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start)
            .count();
    const bool total_ok = total < 60.0;
    if (!total_ok) ++failed;
    std::printf("%s 9 %-32s %7.3f s  (budget 60 s)\n", total_ok ? "PASS" : "FAIL",
                "total-runtime", total);
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
