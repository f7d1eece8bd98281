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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcs/chain.hpp"
#include "gcs/division.hpp"
#include "gcs/dsl.hpp"
#include "gcs/gothic.hpp"
#include "gcs/presets.hpp"
#include "gcs/svg.hpp"
#include "gcs/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 construction error.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;
constexpr int kConstructionError = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

std::string describe(const gcs::Object& obj) {
    using gcs::format_scalar;
    switch (gcs::kind_of(obj)) {
        case gcs::ObjectKind::point: {
            const auto p = std::get<gcs::Point>(obj);
            return "point(" + format_scalar(p.x) + "," + format_scalar(p.y) + ")";
        }
        case gcs::ObjectKind::line: {
            const auto& l = std::get<gcs::Line>(obj);
            return "line(" + format_scalar(l.anchor.x) + "," + format_scalar(l.anchor.y) +
                   ";" + format_scalar(l.direction.x) + "," + format_scalar(l.direction.y) +
                   ")";
        }
        case gcs::ObjectKind::ray: {
            const auto& r = std::get<gcs::Ray>(obj);
            return "ray(" + format_scalar(r.origin.x) + "," + format_scalar(r.origin.y) +
                   ";" + format_scalar(r.direction.x) + "," + format_scalar(r.direction.y) +
                   ")";
        }
        case gcs::ObjectKind::circle: {
            const auto& c = std::get<gcs::Circle>(obj);
            return "circle(" + format_scalar(c.center.x) + "," + format_scalar(c.center.y) +
                   ";r=" + format_scalar(c.radius) + ")";
        }
    }
    return "?";
}

gcs::ConstructionProgram load_program(const std::string& source_path) {
    return gcs::parse(read_file(source_path), source_path);
}

int run_command(const std::string& path, const std::string& trace_out,
                const gcs::Tolerance& tol) {
    const auto program = load_program(path);
    const auto trace = gcs::evaluate(program, tol);
    for (const auto& [id, obj] : trace.objects)
        std::cout << id << "=" << describe(obj) << "\n";
    if (!trace_out.empty()) write_file(trace_out, gcs::export_trace(trace));
    return kOk;
}

int verify_command(const std::string& target, const gcs::Tolerance& tol) {
    std::vector<gcs::CheckResult> results;
    if (gcs::is_preset(target)) {
        results = gcs::verify_preset(target, tol);
    } else {
        results = gcs::verify_program(load_program(target), tol);
    }
    for (const auto& r : results) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << target << "/" << r.name
                  << " residual=" << gcs::format_scalar(r.residual)
                  << " bound=" << gcs::format_scalar(r.bound) << "\n";
    }
    return gcs::all_passed(results) ? kOk : kVerifyFailed;
}

int render_command(const std::string& target, const std::string& out_path,
                   const gcs::Style& style, const gcs::Tolerance& tol) {
    std::string svg;
    if (gcs::is_preset(target)) {
        svg = gcs::render_scene(gcs::preset_scene(gcs::preset(target), tol), style);
    } else {
        svg = gcs::render_trace(gcs::evaluate(load_program(target), tol), style);
    }
    write_file(out_path, svg);
    std::cout << "wrote=" << out_path << "\n";
    return kOk;
}

int sweep_command(double a, double d_min, double d_max, int steps,
                  const std::string& out_path, const gcs::Tolerance& tol) {
    if (steps < 2) throw UsageError("--steps must be at least 2");
    std::vector<gcs::Scalar> ds;
    for (int i = 0; i < steps; ++i)
        ds.push_back(d_min + (d_max - d_min) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1));
    const auto rows = gcs::gothic_family(a, ds, tol);
    std::string csv = "d,x,rho\n";
    for (const auto& row : rows)
        csv += gcs::format_scalar(row.d) + "," + gcs::format_scalar(row.x) + "," +
               gcs::format_scalar(row.rho) + "\n";
    write_file(out_path, csv);
    std::cout << "wrote=" << out_path << "\n";
    return kOk;
}

int chain_command(double alpha, double link, int n, const gcs::Tolerance& tol) {
    const auto chain = gcs::build_chain(alpha, link, n, tol);
    std::cout << "alpha_deg=" << gcs::format_scalar(alpha) << "\n";
    std::cout << "R=" << gcs::format_scalar(link) << "\n";
    std::cout << "n=" << n << "\n";
    std::cout << "degenerate=" << (chain.degenerate ? "true" : "false") << "\n";
    for (int k = 1; k <= chain.size(); ++k) {
        std::cout << "C" << k << ".x=" << gcs::format_scalar(chain.center(k).x) << "\n";
        std::cout << "C" << k << ".y=" << gcs::format_scalar(chain.center(k).y) << "\n";
    }
    for (int k = 1; k < chain.size(); ++k)
        std::cout << "link_angle_" << k
                  << "_deg=" << gcs::format_scalar(gcs::link_multiple_angle(chain, k, tol))
                  << "\n";
    return kOk;
}

int divide_angle_command(double theta, int m, const gcs::Tolerance& tol) {
    const auto result = gcs::divide_angle(theta, m, tol);
    std::cout << "result_deg=" << gcs::format_scalar(result.result_deg) << "\n";
    std::cout << "residual_deg=" << gcs::format_scalar(result.residual_deg) << "\n";
    std::cout << "iterations=" << result.iterations << "\n";
    std::cout << "alpha_deg=" << gcs::format_scalar(result.alpha_deg) << "\n";
    std::cout << "radius=" << gcs::format_scalar(result.radius) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compass-and-straightedge construction kit"};
    app.require_subcommand(1);

    double tol_value = 1e-9;
    app.add_option("--tol", tol_value, "absolute tolerance")->capture_default_str();

    std::string run_path, run_trace_out;
    auto* run = app.add_subcommand("run", "evaluate a .gcs script and print its objects");
    run->add_option("script", run_path, "path to a .gcs script")->required();
    run->add_option("--trace-out", run_trace_out, "also write the JSON trace here");

    std::string verify_target;
    auto* verify = app.add_subcommand("verify", "run invariant checks for a preset or script");
    verify->add_option("target", verify_target, "preset name or script path")->required();

    std::string render_target, render_out;
    double render_size = 480, render_margin = 24;
    auto* render = app.add_subcommand("render", "render a preset or script to SVG");
    render->add_option("target", render_target, "preset name or script path")->required();
    render->add_option("-o,--out", render_out, "output SVG path")->required();
    render->add_option("--size", render_size, "target pixel size")->capture_default_str();
    render->add_option("--margin", render_margin, "canvas margin")->capture_default_str();

    double sweep_a = 1, sweep_dmin = 0, sweep_dmax = 1.9;
    int sweep_steps = 20;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep-gothic",
                                     "tabulate the equal-radius inscribed circle family");
    sweep->add_option("--a", sweep_a, "arc radius")->capture_default_str();
    sweep->add_option("--d-min", sweep_dmin, "smallest center distance")->capture_default_str();
    sweep->add_option("--d-max", sweep_dmax, "largest center distance")->capture_default_str();
    sweep->add_option("--steps", sweep_steps, "number of rows")->capture_default_str();
    sweep->add_option("-o,--out", sweep_out, "output CSV path")->required();

    double chain_alpha = 30, chain_link = 1;
    int chain_n = 4;
    auto* chain = app.add_subcommand("chain", "build an angle chain and print its centers");
    chain->add_option("--alpha", chain_alpha, "base angle in degrees")->required();
    chain->add_option("--R", chain_link, "link length")->capture_default_str();
    chain->add_option("--n", chain_n, "number of centers")->required();

    double da_theta = 90;
    int da_m = 2;
    auto* da = app.add_subcommand("divide-angle", "divide an angle through the chain model");
    da->add_option("--theta", da_theta, "angle in degrees")->required();
    da->add_option("--m", da_m, "number of equal parts")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsageError;
    }

    if (!(tol_value > 0) || !std::isfinite(tol_value)) {
        std::cerr << "error: --tol must be a positive number\n";
        return kUsageError;
    }
    gcs::Tolerance tol;
    tol.eps_abs = tol_value;

    try {
        if (*run) return run_command(run_path, run_trace_out, tol);
        if (*verify) return verify_command(verify_target, tol);
        if (*render) {
            gcs::Style style;
            style.target_size = render_size;
            style.margin = render_margin;
            return render_command(render_target, render_out, style, tol);
        }
        if (*sweep) return sweep_command(sweep_a, sweep_dmin, sweep_dmax, sweep_steps,
                                         sweep_out, tol);
        if (*chain) return chain_command(chain_alpha, chain_link, chain_n, tol);
        if (*da) return divide_angle_command(da_theta, da_m, tol);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const gcs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const gcs::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kUsageError;
    } catch (const gcs::Error& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return kConstructionError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstructionError;
    }
    return kUsageError;
}
