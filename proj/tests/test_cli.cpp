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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chipfire/cli.hpp"
#include "chipfire/io.hpp"

using namespace chipfire;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "chipfire");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHIPFIRE_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("chipfire_test_" + name)).string();
}

} // namespace

TEST_CASE("solve") {
    const Run intro = cli({"solve", data("intro.json")});
    CHECK(intro.code == kExitOk);
    const Json j = Json::parse(intro.out);
    CHECK(j["move_count"] == 4);
    CHECK(j["status"] == "won");

    const Run stable = cli({"solve", data("stable.json")});
    CHECK(stable.code == kExitOk);
    CHECK(Json::parse(stable.out)["move_count"] == 0);

    const Run lost = cli({"solve", data("unwinnable2.json")});
    CHECK(lost.code == kExitUnwinnable);
    CHECK(Json::parse(lost.out)["status"] == "unwinnable");

    const Run traced = cli({"solve", data("intro.json"), "--trace", "--policy", "highest_index"});
    CHECK(Json::parse(traced.out)["states"].size() == 5);
}

TEST_CASE("solve reports malformed input with its location") {
    const Run bad = cli({"solve", data("bad_edge.json")});
    CHECK(bad.code == kExitMalformed);
    CHECK(bad.err.find("$.edges[1][1]") != std::string::npos);
    const Run short_div = cli({"solve", data("bad_divisor.json")});
    CHECK(short_div.code == kExitMalformed);
    CHECK(short_div.err.find("$.divisor") != std::string::npos);
    CHECK(cli({"solve", data("missing.json")}).code == kExitMalformed);
    CHECK(cli({"solve", data("intro.json"), "--policy", "bogus"}).code == kExitMalformed);
    CHECK(cli({"frobnicate"}).code == kExitMalformed);
}

TEST_CASE("step limit exit code") {
    const std::string path = temp_path("star.json");
    REQUIRE(cli({"gen", "star", "--n", "5", "--k", "50", "--out", path}).code == kExitOk);
    const Run r = cli({"solve", path, "--max-steps", "3"});
    CHECK(r.code == kExitStepLimit);
    CHECK(Json::parse(r.out)["status"] == "step_limit");
    std::remove(path.c_str());
}

TEST_CASE("optimal") {
    const Run intro = cli({"optimal", data("intro.json")});
    CHECK(intro.code == kExitOk);
    const Json j = Json::parse(intro.out);
    CHECK(j["m_min"] == 1);
    CHECK(j["bound_rational"] == Json{{"num", 4}, {"den", 5}});

    const std::string path = temp_path("star52.json");
    REQUIRE(cli({"gen", "star", "-n", "5", "-k", "2", "--out", path}).code == kExitOk);
    const Run star = cli({"optimal", path});
    CHECK(star.code == kExitOk);
    CHECK(Json::parse(star.out)["tight"] == true);
    const Run coset = cli({"optimal", path, "--method", "coset", "--explain"});
    const Json cj = Json::parse(coset.out);
    CHECK(cj["method"] == "coset");
    CHECK(cj["m_min"] == 2);
    CHECK(cj["explain"]["minimal_norm"] == 2);
    std::remove(path.c_str());

    const Run stable = cli({"optimal", data("stable.json")});
    const Json sj = Json::parse(stable.out);
    CHECK(sj["m0"] == 0);
    CHECK(sj["m_min"] == 0);
    CHECK(sj["bound_rational"] == Json{{"num", 0}, {"den", 1}});

    CHECK(cli({"optimal", data("unwinnable2.json")}).code == kExitUnwinnable);
    CHECK(cli({"optimal", data("intro.json"), "--method", "bfs", "--cap", "0"}).code == kExitSearchExhausted);
}

TEST_CASE("gen") {
    const Run intro = cli({"gen", "intro"});
    CHECK(intro.code == kExitOk);
    const Instance inst = instance_from_string(intro.out);
    CHECK(inst.divisor == Divisor{-1, 0, 2, 0, 2, 3});

    const Run hybrid = cli({"gen", "hybrid", "--n", "4", "--k", "1"});
    CHECK(Json::parse(hybrid.out)["num_vertices"] == 5);
    CHECK(cli({"gen", "hybrid", "--n", "5"}).code == kExitMalformed);

    const Run a = cli({"gen", "random", "--n", "5", "--p", "1/2", "--seed", "42"});
    const Run b = cli({"gen", "random", "--n", "5", "--p", "1/2", "--seed", "42"});
    CHECK(a.out == b.out);

    const Run dot = cli({"gen", "intro", "--format", "dot"});
    CHECK(dot.out.rfind("graph \"intro\" {", 0) == 0);
    CHECK(dot.out.find("0 [label=\"0\\n-1\", color=red]") != std::string::npos);
}

TEST_CASE("outputs are byte-stable") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", data("intro.json"), "--trace"}, {"optimal", data("intro.json"), "--explain"}}) {
        CHECK(cli(args).out == cli(args).out);
    }
}
