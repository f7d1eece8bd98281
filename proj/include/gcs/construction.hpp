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

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gcs/geometry.hpp"

namespace gcs {

// ---------------------------------------------------------------------------
// Steps and programs

enum class StepRule {
    free_point,
    line_through,
    ray_from,
    circle_center_point,
    circle_center_radius,
    intersect,
    midpoint,
    perpendicular_at,
    perpendicular_bisector,
    macro_call,
};

enum class ObjectKind { point, line, ray, circle };

// One argument of a macro call, kept structured so scripts round-trip.
struct MacroArg {
    enum class Kind { ident, number, angle_deg, ratio };
    Kind kind = Kind::number;
    std::string key;               // empty for positional arguments
    std::string ident;
    Scalar number = 0;             // number and angle_deg payload
    std::vector<long long> ratio;  // ratio payload, e.g. 2:3:1

    bool operator==(const MacroArg&) const = default;
};

struct Step {
    std::string id;
    StepRule rule = StepRule::free_point;
    std::vector<std::string> inputs;

    Point coords;                       // free_point
    Scalar radius = 0;                  // circle_center_radius
    int branch = 0;                     // intersect
    std::string macro_name;             // macro_call
    std::vector<MacroArg> macro_args;   // macro_call
    ObjectKind macro_result = ObjectKind::point;  // declared type of a macro call

    // Marks a value that had to be solved numerically rather than drawn;
    // expanders set it when they bake a solved length into a step.
    bool solved = false;

    bool operator==(const Step& o) const;
};

struct ConstructionProgram {
    std::string name;
    std::string description;
    std::vector<Step> steps;

    bool operator==(const ConstructionProgram&) const = default;
};

// Step-by-step equality of the step lists; metadata is ignored. This is the
// equality the parse/format round trip promises.
bool structurally_equal(const ConstructionProgram& a, const ConstructionProgram& b);

// ---------------------------------------------------------------------------
// Traces

using Object = std::variant<Point, Line, Ray, Circle>;

ObjectKind kind_of(const Object& o);
const char* kind_name(ObjectKind k);

// How faithful a step is to the classical instruments. Point marks and
// linear strokes count as straightedge work; anything that sets a compass
// opening (including the classical midpoint and perpendicular compounds)
// counts as compass work. "numeric" flags magnitudes that were solved, not
// constructed; "macro" labels unexpanded macro calls.
enum class StepClass { compass, straightedge, macro_op, numeric };

const char* step_class_name(StepClass c);
StepClass classify(const Step& step);

struct Trace {
    std::string program_name;
    // Evaluation order; includes every program id plus macro exports.
    std::vector<std::pair<std::string, Object>> objects;
    // Keyed by step id (exports carry the class of the step that made them).
    std::map<std::string, StepClass> classes;

    bool contains(const std::string& id) const;
    const Object& at(const std::string& id) const;
    bool pure_compass_straightedge() const;
};

bool traces_equal(const Trace& a, const Trace& b);

// ---------------------------------------------------------------------------
// Errors

struct ValidationError : Error {
    ValidationError(std::string step_id_, const std::string& what,
                    int line_ = 0, int column_ = 0)
        : Error(what), step_id(std::move(step_id_)), line(line_), column(column_) {}
    std::string step_id;
    int line = 0;    // 1-based when known, 0 for programmatic programs
    int column = 0;
};

struct BranchUnavailable : Error {
    BranchUnavailable(std::string step_id_, const std::string& what)
        : Error(what), step_id(std::move(step_id_)) {}
    std::string step_id;
};

struct StepFailure : Error {
    StepFailure(std::string step_id_, const std::string& what)
        : Error(what), step_id(std::move(step_id_)) {}
    std::string step_id;
};

struct UnknownMacro : Error {
    UnknownMacro(std::string name_, const std::string& what)
        : Error(what), name(std::move(name_)) {}
    std::string name;
};

// ---------------------------------------------------------------------------
// Macro expansion

class StepBuilder;

// Expands one macro call into primitive steps, appending them to the
// builder. Expanders may evaluate as they emit, which is how data-dependent
// branch indices get baked into the primitive program.
using MacroExpander = std::function<void(const Step& call, StepBuilder& out)>;

class MacroRegistry {
  public:
    void add(const std::string& name, ObjectKind result, MacroExpander fn);
    bool has(const std::string& name) const;
    const MacroExpander& expander(const std::string& name) const;
    ObjectKind result_kind(const std::string& name) const;

    // divide_thales, divide_circles, gothic_inscribe, angle_chain.
    static const MacroRegistry& standard();

  private:
    struct Entry {
        ObjectKind result;
        MacroExpander fn;
    };
    std::map<std::string, Entry> entries_;
};

// Object environment shared by evaluation and expansion.
class ObjectScope {
  public:
    bool contains(const std::string& id) const;
    const Object& at(const std::string& id) const;
    void bind(const std::string& id, Object obj);

  private:
    std::vector<std::pair<std::string, Object>> ordered_;
    std::unordered_map<std::string, std::size_t> index_;

    friend class StepBuilder;
};

// Emits primitive steps on behalf of a macro expander and evaluates each one
// immediately, so expanders can look at coordinates to resolve branches.
// Ids created through fresh() are internal to the expansion; steps emitted
// under the macro id (or "<id>_suffix") become the macro's exports.
class StepBuilder {
  public:
    StepBuilder(ObjectScope& scope, std::string macro_id, Tolerance tol);

    const std::string& macro_id() const { return macro_id_; }
    const Tolerance& tolerance() const { return tol_; }

    std::string fresh(const std::string& hint);

    const Object& object(const std::string& id) const { return scope_.at(id); }
    Point point_at(const std::string& id) const;

    std::string free_point(const std::string& id, Point p, bool solved = false);
    std::string line(const std::string& id, const std::string& a, const std::string& b);
    std::string ray(const std::string& id, const std::string& origin, const std::string& through);
    std::string circle(const std::string& id, const std::string& center, const std::string& through);
    std::string circle_with_radius(const std::string& id, const std::string& center,
                                   Scalar radius, bool solved = true);
    std::string midpoint(const std::string& id, const std::string& a, const std::string& b);
    std::string perpendicular_at(const std::string& id, const std::string& line_id,
                                 const std::string& point_id);
    std::string perpendicular_bisector(const std::string& id, const std::string& a,
                                       const std::string& b);
    std::string intersect(const std::string& id, const std::string& a, const std::string& b,
                          int branch);

    // Branch pickers; the chosen index is baked into the emitted step.
    std::string intersect_excluding(const std::string& id, const std::string& a,
                                    const std::string& b, Point excluded);
    std::string intersect_left_of(const std::string& id, const std::string& a,
                                  const std::string& b, Point from, Point to);
    std::string intersect_toward(const std::string& id, const std::string& a,
                                 const std::string& b, Point from, Point toward);

    // Point reflection of `point` through `center` (compass and straightedge).
    std::string reflect(const std::string& id, const std::string& center,
                        const std::string& point);

    // A point at distance |pq| from `center`: the compass transfer of a
    // length by the parallelogram construction.
    std::string radius_point(const std::string& id, const std::string& center,
                             const std::string& p, const std::string& q);

    std::vector<Step> take() { return std::move(steps_); }
    const std::vector<Step>& steps() const { return steps_; }

  private:
    std::string emit(Step step);

    ObjectScope& scope_;
    std::string macro_id_;
    Tolerance tol_;
    std::vector<Step> steps_;
    int counter_ = 0;
};

// ---------------------------------------------------------------------------
// Engine operations

// Static checks: unique ids, references to earlier steps only, arity and
// input types, non-negative branch indices. Throws ValidationError.
void validate(const ConstructionProgram& p);

// Evaluates the program into a trace. Macro steps are expanded on the fly;
// the trace lists program ids plus macro exports (internal scaffolding ids
// are omitted) and classifies the macro step itself as "macro".
Trace evaluate(const ConstructionProgram& p, const Tolerance& tol = {},
               const MacroRegistry& macros = MacroRegistry::standard());

// Replaces every macro call by its primitive steps. Evaluating the result
// reproduces the original program's objects id for id.
ConstructionProgram expand_macros(const ConstructionProgram& p, const Tolerance& tol = {},
                                  const MacroRegistry& macros = MacroRegistry::standard());

// JSON trace export/import; stable key and element order.
std::string export_trace(const Trace& t);
Trace import_trace(const std::string& json_text);

// Shortest decimal form that parses back to exactly the same Scalar.
std::string format_scalar(Scalar v);

}  // namespace gcs
