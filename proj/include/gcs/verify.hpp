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
#include <vector>

#include "gcs/construction.hpp"

namespace gcs {

struct CheckResult {
    std::string name;
    bool passed = false;
    Scalar residual = 0;  // measured deviation
    Scalar bound = 0;     // allowed deviation
};

// Invariant suite for a bundled preset; checks are ordered by name.
std::vector<CheckResult> verify_preset(const std::string& name, const Tolerance& tol = {});

// Generic audit of a user program: validates, evaluates, and confirms that
// every intersection point satisfies both parent objects within tolerance.
std::vector<CheckResult> verify_program(const ConstructionProgram& program,
                                        const Tolerance& tol = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gcs
