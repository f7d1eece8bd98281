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

#include "gcs/construction.hpp"

namespace gcs {

// Script format: one statement per line, '#' starts a comment.
//
//   point <id> = (<num>, <num>)
//   line <id> = line(<id>, <id>)
//   ray <id> = ray(<id>, <id>)
//   circle <id> = circle(<id>, <id>)
//   circle <id> = circle(<id>, r=<num>)
//   point <id> = intersect(<id>, <id>, <int>)
//   point <id> = midpoint(<id>, <id>)
//   line <id> = perp(<id>, at=<id>)
//   line <id> = bisector(<id>, <id>)
//   <type> <id> = macro <name>(<args>)
//
// Identifiers are [A-Za-z][A-Za-z0-9_]*. Numbers are decimal with an
// optional exponent. Angles in macro arguments carry a `deg` suffix;
// ratios are written p1:p2:...  The canonical file extension is `.gcs`.

struct ParseError : Error {
    ParseError(int line_, int column_, const std::string& what, std::string token_ = {})
        : Error(what), line(line_), column(column_), token(std::move(token_)) {}
    int line;    // 1-based
    int column;  // 1-based, always inside the offending source line
    std::string token;
};

ConstructionProgram parse(const std::string& source, const std::string& name = "");

std::string format(const ConstructionProgram& program);

}  // namespace gcs
