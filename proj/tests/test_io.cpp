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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chipfire/families.hpp"
#include "chipfire/io.hpp"

using namespace chipfire;

namespace {

std::string malformed_message(const std::string& text) {
    try {
        instance_from_string(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedInput);
        return e.what();
    }
    FAIL("expected MalformedInput");
    return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("instance round trip") {
    const Instance star = star_example(5, 2);
    const Json j = instance_to_json(star);
    CHECK(j.dump() ==
          R"({"name":"star_n5_k2","num_vertices":5,"edges":[[0,1],[0,2],[0,3],[0,4]],"divisor":[-10,2,2,2,2],)"
          R"("expected":{"m0":8,"m_min":2,"ratio":{"num":4,"den":1},"side":"chip"}})");
    const Instance back = instance_from_json(j);
    CHECK(back.graph == star.graph);
    CHECK(back.divisor == star.divisor);
    REQUIRE(back.expected);
    CHECK(back.expected->side == Side::chip);
    CHECK(back.expected->ratio == Rational(4));
}

TEST_CASE("minimal instance parses") {
    const Instance inst = instance_from_string(R"({"num_vertices":2,"edges":[[1,0]],"divisor":[3,-3]})");
    CHECK(inst.name.empty());
    CHECK(inst.graph.edges() == std::vector<Edge>{{0, 1}});
    CHECK_FALSE(inst.expected);
}

TEST_CASE("parse errors name the JSON path") {
    CHECK(contains(malformed_message(R"({"num_vertices":3,"edges":[[0,1],[1,"x"]],"divisor":[0,0,0]})"),
                   "$.edges[1][1]"));
    CHECK(contains(malformed_message(R"({"num_vertices":3,"edges":[[0,1],[1,2]],"divisor":[0,0]})"), "$.divisor"));
    CHECK(contains(malformed_message(R"({"edges":[],"divisor":[]})"), "num_vertices"));
    CHECK(contains(malformed_message(R"({"num_vertices":3,"edges":[[0,1]],"divisor":[0,0,0]})"), "Disconnected"));
    CHECK(contains(malformed_message(R"({"num_vertices":2,"edges":[[0,1],[0,1]],"divisor":[0,0]})"), "DuplicateEdge"));
    CHECK(contains(malformed_message(R"({"num_vertices":2,"edges":[[0,5]],"divisor":[0,0]})"), "$.edges[0][1]"));
    CHECK(contains(malformed_message(R"({"num_vertices":2,"edges":[[0,1]],"divisor":[0,1.5]})"), "$.divisor[1]"));
    CHECK(contains(malformed_message("{not json"), "invalid JSON"));
    CHECK(contains(malformed_message(
                       R"({"num_vertices":2,"edges":[[0,1]],"divisor":[0,0],"expected":{"side":"north"}})"),
                   "$.expected.side"));
}

TEST_CASE("trace json") {
    const Instance intro = intro_example();
    const RunResult r = borrowing_binge(intro.graph, intro.divisor);
    const Json j = trace_to_json(r);
    CHECK(j["move_count"] == 4);
    CHECK(j["status"] == "won");
    CHECK(j["final"] == Json::array({0, 1, 2, 1, 1, 1}));
    CHECK(j["aggregate"] == Json::array({-1, -1, -1, -1, 0, 0}));
    CHECK(j["moves"][0] == Json{{"vertex", 0}, {"kind", "borrow"}});
    CHECK_FALSE(j.contains("states"));
    CHECK(trace_to_json(r, true)["states"].size() == 5);
}

TEST_CASE("report json") {
    const Instance intro = intro_example();
    const Json j = report_to_json(verify_theorem(intro.graph, intro.divisor, Side::dollar));
    CHECK(j["m0"] == 4);
    CHECK(j["m_min"] == 1);
    CHECK(j["bound_rational"] == Json{{"num", 4}, {"den", 5}});
    CHECK(j["bound_ceiling"] == 1);
    CHECK(j["holds"] == true);
    CHECK(j["tight"] == false);
    CHECK(j["method"] == "bfs");
    CHECK(j["witness_moves"] == Json::array({Json{{"vertex", 4}, {"kind", "lend"}}}));
}

TEST_CASE("shift json") {
    const Json j = shift_to_json(minimal_representative(FiringVector{5, 1, 0}));
    CHECK(j.dump() ==
          R"({"input":[5,1,0],"shift_k":1,"minimal":[4,0,-1],"input_norm":6,"minimal_norm":5,"positives":1,"negatives":1,"zeros":1})");
}

TEST_CASE("dot export") {
    const Graph g = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK(to_dot(g, Divisor{-1, 0, 2}, "p3") ==
          "graph \"p3\" {\n"
          "  0 [label=\"0\\n-1\", color=red];\n"
          "  1 [label=\"1\\n0\"];\n"
          "  2 [label=\"2\\n2\"];\n"
          "  0 -- 1;\n"
          "  1 -- 2;\n"
          "}\n");
}
