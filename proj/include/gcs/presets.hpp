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
#include "gcs/svg.hpp"

namespace gcs {

// Bundled figures: the two segment divisions (fig1a, fig1b), the inscribed
// circle of the two-arc triangle in its degenerate, symmetric and unequal
// forms (fig2b..fig2e, gothic-unit), and the 30-degree four-center angle
// chain (fig3a, chain-30-4).
struct Preset {
    std::string name;
    std::string summary;
    ConstructionProgram program;
    // Curated view of the evaluated program: what the figure shows, not
    // every construction mark.
    std::vector<SceneItem> (*display)(const Trace& trace);
};

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
const Preset& preset(const std::string& name);

// Evaluates the preset program and builds its curated scene.
std::vector<SceneItem> preset_scene(const Preset& p, const Tolerance& tol = {});

}  // namespace gcs
