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
#include "gcs/construction.hpp"
#include "gcs/division.hpp"
#include "gcs/gothic.hpp"

namespace gcs {

const MacroRegistry& MacroRegistry::standard() {
    static const MacroRegistry registry = [] {
        MacroRegistry r;
        register_division_macros(r);
        register_gothic_macros(r);
        register_chain_macros(r);
        return r;
    }();
    return registry;
}

}  // namespace gcs
