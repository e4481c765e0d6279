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

#include "chipfire/io.hpp"

#include <sstream>
#include <vector>

namespace chipfire {

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::MalformedInput, path + ": " + what);
}

std::int64_t read_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) malformed(path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        malformed(path, "integer out of range");
    return j.get<std::int64_t>();
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) malformed(path, std::string("missing required key \"") + key + "\"");
    return *it;
}

std::vector<Chips> read_int_array(const Json& j, const std::string& path) {
    if (!j.is_array()) malformed(path, "expected an array of integers");
    std::vector<Chips> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Rational read_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(read_int(j, path));
    if (!j.is_object()) malformed(path, "expected {\"num\":p,\"den\":q}");
    const auto num = read_int(require(j, "num", path), path + ".num");
    const auto den = read_int(require(j, "den", path), path + ".den");
    if (den == 0) malformed(path + ".den", "zero denominator");
    return Rational(num, den);
}

} // namespace

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) malformed("$", "expected an object");

    std::string name;
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string()) malformed("$.name", "expected a string");
        name = it->get<std::string>();
    }

    const std::int64_t n = read_int(require(j, "num_vertices", "$"), "$.num_vertices");
    if (n < 1) malformed("$.num_vertices", "must be positive");

    const Json& edges_json = require(j, "edges", "$");
    if (!edges_json.is_array()) malformed("$.edges", "expected an array of [u,v] pairs");
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < edges_json.size(); ++e) {
        const std::string path = "$.edges[" + std::to_string(e) + "]";
        const Json& pair = edges_json[e];
        if (!pair.is_array() || pair.size() != 2) malformed(path, "expected a pair [u,v]");
        const auto u = read_int(pair[0], path + "[0]");
        const auto v = read_int(pair[1], path + "[1]");
        if (u < 0 || u >= n) malformed(path + "[0]", "vertex out of range");
        if (v < 0 || v >= n) malformed(path + "[1]", "vertex out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    std::optional<Graph> graph;
    try {
        graph = Graph::build(static_cast<std::size_t>(n), edges);
    } catch (const Error& e) {
        malformed("$.edges", e.what());
    }

    Divisor divisor(read_int_array(require(j, "divisor", "$"), "$.divisor"));
    if (static_cast<std::int64_t>(divisor.size()) != n)
        malformed("$.divisor", "has length " + std::to_string(divisor.size()) + ", expected " + std::to_string(n));

    std::optional<Expected> expected;
    if (auto it = j.find("expected"); it != j.end() && !it->is_null()) {
        const Json& e = *it;
        if (!e.is_object()) malformed("$.expected", "expected an object");
        Expected x;
        if (auto f = e.find("m0"); f != e.end()) x.m0 = read_int(*f, "$.expected.m0");
        if (auto f = e.find("m_min"); f != e.end()) x.m_min = read_int(*f, "$.expected.m_min");
        if (auto f = e.find("ratio"); f != e.end()) x.ratio = read_rational(*f, "$.expected.ratio");
        if (auto f = e.find("side"); f != e.end()) {
            if (!f->is_string()) malformed("$.expected.side", "expected \"dollar\" or \"chip\"");
            try {
                x.side = parse_side(f->get<std::string>());
            } catch (const Error& err) {
                malformed("$.expected.side", err.what());
            }
        }
        expected = x;
    }
    return {std::move(name), std::move(*graph), std::move(divisor), expected};
}

Instance instance_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed("$", std::string("invalid JSON at byte ") + std::to_string(e.byte));
    }
    return instance_from_json(j);
}

Json rational_to_json(const Rational& r) {
    return Json{{"num", r.num()}, {"den", r.den()}};
}

Json move_to_json(const Move& m) {
    return Json{{"vertex", m.vertex}, {"kind", std::string(to_string(m.kind))}};
}

Json divisor_to_json(const Divisor& d) { return Json(d.values); }

Json firing_to_json(const FiringVector& v) { return Json(v.counts); }

Json instance_to_json(const Instance& inst) {
    Json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    j["num_vertices"] = inst.graph.num_vertices();
    Json edges = Json::array();
    for (const auto& [u, v] : inst.graph.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    j["divisor"] = divisor_to_json(inst.divisor);
    if (inst.expected) {
        j["expected"] = Json{{"m0", inst.expected->m0},
                             {"m_min", inst.expected->m_min},
                             {"ratio", rational_to_json(inst.expected->ratio)},
                             {"side", std::string(to_string(inst.expected->side))}};
    }
    return j;
}

Json trace_to_json(const RunResult& run, bool include_states) {
    Json moves = Json::array();
    for (const Move& m : run.trace.moves) moves.push_back(move_to_json(m));
    Json j;
    j["moves"] = std::move(moves);
    j["aggregate"] = firing_to_json(run.trace.aggregate);
    j["move_count"] = run.trace.move_count;
    j["final"] = divisor_to_json(run.trace.final_state);
    j["status"] = std::string(to_string(run.status));
    if (run.cycle_witness) j["cycle_witness"] = divisor_to_json(*run.cycle_witness);
    if (include_states && !run.trace.states.empty()) {
        Json states = Json::array();
        for (const Divisor& d : run.trace.states) states.push_back(divisor_to_json(d));
        j["states"] = std::move(states);
    }
    return j;
}

Json report_to_json(const SolveReport& r) {
    Json moves = Json::array();
    for (const Move& m : r.witness_moves) moves.push_back(move_to_json(m));
    Json j;
    j["status"] = std::string(to_string(r.status));
    j["side"] = std::string(to_string(r.side));
    j["n"] = r.n;
    j["m0"] = r.m0;
    j["m_min"] = r.m_min;
    j["bound_rational"] = rational_to_json(r.bound_rational);
    j["bound_ceiling"] = r.bound_ceiling;
    j["holds"] = r.holds;
    j["tight"] = r.tight;
    j["witness_moves"] = std::move(moves);
    j["witness_target"] = divisor_to_json(r.witness_target);
    j["method"] = std::string(to_string(r.method));
    j["greedy_aggregate"] = firing_to_json(r.greedy_aggregate);
    j["greedy_final"] = divisor_to_json(r.greedy_final);
    return j;
}

Json shift_to_json(const ShiftAnalysis& s) {
    return Json{{"input", firing_to_json(s.input)},
                {"shift_k", s.shift},
                {"minimal", firing_to_json(s.minimal)},
                {"input_norm", s.input_norm},
                {"minimal_norm", s.minimal_norm},
                {"positives", s.positives},
                {"negatives", s.negatives},
                {"zeros", s.zeros}};
}

std::string to_dot(const Graph& g, const Divisor& d, const std::string& name) {
    check_dimension(g, d.size(), "divisor");
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v << " [label=\"" << v << "\\n" << d[v] << "\"";
        if (d[v] < 0) out << ", color=red";
        out << "];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace chipfire
