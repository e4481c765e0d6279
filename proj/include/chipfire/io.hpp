// Copyright 2026 The chipfire Authors
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

#ifndef CHIPFIRE_IO_HPP
#define CHIPFIRE_IO_HPP

#include <string>

#include "json.hpp"

#include "chipfire/engine.hpp"
#include "chipfire/families.hpp"
#include "chipfire/renorm.hpp"
#include "chipfire/solver.hpp"

namespace chipfire {

using Json = nlohmann::ordered_json;

// Instance:  {"name", "num_vertices", "edges": [[u,v],...], "divisor": [...],
//             "expected": {"m0", "m_min", "ratio": {"num","den"}, "side"}}
// "name" and "expected" are optional. Parse errors are MalformedInput
// with a JSONPath-style location such as "$.edges[2][1]".
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

/// Parses text then the instance; syntax errors name the byte offset.
Instance instance_from_string(const std::string& text);

Json rational_to_json(const Rational& r);
Json move_to_json(const Move& m);
Json divisor_to_json(const Divisor& d);
Json firing_to_json(const FiringVector& v);

/// Trace JSON: {"moves", "aggregate", "move_count", "final", "status"},
/// plus "states" when requested and available.
Json trace_to_json(const RunResult& run, bool include_states = false);

Json report_to_json(const SolveReport& report);
Json shift_to_json(const ShiftAnalysis& shift);

/// Graphviz rendering. Vertex labels are "<index>\n<chips>"; vertices in
/// debt are drawn red.
std::string to_dot(const Graph& g, const Divisor& d, const std::string& name = "G");

} // namespace chipfire

#endif
