#include "doctest.h"
#include "gcs/dsl.hpp"
#include "gcs/presets.hpp"
#include "gcs/verify.hpp"

using namespace gcs;

namespace {
const Tolerance tol;
}

TEST_CASE("every preset formats and parses back unchanged") {
    for (const std::string& name : preset_names()) {
        const Preset& p = preset(name);
        const std::string text = format(p.program);
        ConstructionProgram back;
        REQUIRE_NOTHROW(back = parse(text, name));
        CHECK(structurally_equal(p.program, back));
    }
}

TEST_CASE("every preset evaluates and yields a nonempty scene") {
    for (const std::string& name : preset_names()) {
        const auto scene = preset_scene(preset(name), tol);
        CHECK(!scene.empty());
    }
}

TEST_CASE("preset lookups") {
    CHECK(is_preset("gothic-unit"));
    CHECK(!is_preset("gothic-units"));
    CHECK_THROWS_AS(preset("nope"), DomainError);
    CHECK(preset_names().size() == 9);
}

TEST_CASE("verification suites pass for all presets") {
    for (const std::string& name : preset_names()) {
        const auto results = verify_preset(name, tol);
        CHECK(!results.empty());
        for (const auto& r : results) {
            if (!r.passed)
                FAIL_CHECK(name << "/" << r.name << " residual=" << r.residual
                                << " bound=" << r.bound);
        }
    }
}

TEST_CASE("verify_preset rejects unknown names") {
    CHECK_THROWS_AS(verify_preset("unknown", tol), DomainError);
}

TEST_CASE("program audit flags intersection residuals") {
    const auto p = parse(
        "point A = (0, 0)\n"
        "point B = (1, 0)\n"
        "point D = macro divide_circles(A, B, 2:3)\n");
    const auto results = verify_program(p, tol);
    CHECK(all_passed(results));
}
