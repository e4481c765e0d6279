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

#include "chipfire/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"

#include "chipfire/io.hpp"
#include "chipfire/service.hpp"

namespace chipfire {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Side choose_side(const std::string& flag, const Instance& inst) {
    if (!flag.empty()) return parse_side(flag);
    return inst.expected ? inst.expected->side : Side::dollar;
}

int default_port() {
    if (const char* env = std::getenv("CHIPFIRE_PORT")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return 8080;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dollar game and chip-firing analyzer"};
    app.require_subcommand(1);

    std::string file;
    std::string policy = "lowest_index";
    std::string side;
    bool with_states = false;
    std::int64_t max_steps = 1'000'000;
    auto* solve = app.add_subcommand("solve", "Run the greedy strategy and print its trace");
    solve->add_option("instance", file, "Instance JSON file, or - for stdin")->required();
    solve->add_option("--policy", policy, "lowest_index|highest_index|most_negative_first|most_chips_first|random:<seed>");
    solve->add_option("--side", side, "dollar (borrowing binge) or chip (greedy stabilization)");
    solve->add_flag("--trace", with_states, "Include every intermediate divisor");
    solve->add_option("--max-steps", max_steps, "Step limit");

    std::string method = "auto";
    std::int64_t cap = -1;
    std::int64_t budget = 1'000'000;
    bool explain = false;
    auto* optimal = app.add_subcommand("optimal", "Compute the minimal move count and check the lower bound");
    optimal->add_option("instance", file, "Instance JSON file, or - for stdin")->required();
    optimal->add_option("--method", method, "auto|bfs|coset");
    optimal->add_option("--cap", cap, "BFS radius cap (default: greedy move count)");
    optimal->add_option("--budget", budget, "Coset search node budget");
    optimal->add_option("--side", side, "dollar or chip (default: from the instance, else dollar)");
    optimal->add_flag("--explain", explain, "Add the coset analysis of the greedy firing vector");

    std::string family;
    std::int64_t n = 0;
    std::int64_t k = 1;
    std::string probability = "1/2";
    std::int64_t lo = -3;
    std::int64_t hi = 3;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("family", family, "intro|star|hybrid|random")
        ->required()
        ->check(CLI::IsMember({"intro", "star", "hybrid", "random"}));
    gen->add_option("-n,--n", n, "Size parameter");
    gen->add_option("-k,--k", k, "Chip multiplier");
    gen->add_option("-p,--p", probability, "Edge probability (random), e.g. 1/2");
    gen->add_option("--lo", lo, "Smallest chip count (random)");
    gen->add_option("--hi", hi, "Largest chip count (random)");
    gen->add_option("--seed", seed, "Seed (random)");
    gen->add_option("--out", out_path, "Write to this file instead of stdout");
    gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    int port = default_port();
    std::string static_dir;
    std::size_t session_cap = 1024;
    auto* serve = app.add_subcommand("serve", "Serve the playground API");
    serve->add_option("--port", port, "Port (default $CHIPFIRE_PORT or 8080)");
    serve->add_option("--static-dir", static_dir, "Directory of UI assets");
    serve->add_option("--session-cap", session_cap, "Maximum live sessions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (*solve) {
            const Instance inst = instance_from_string(read_input(file));
            const Side s = choose_side(side, inst);
            RunOptions options{TieBreakPolicy::parse(policy), max_steps, with_states};
            const RunResult run = s == Side::dollar ? borrowing_binge(inst.graph, inst.divisor, options)
                                                    : greedy_stabilize(inst.graph, inst.divisor, options);
            out << trace_to_json(run, with_states).dump(2) << '\n';
            switch (run.status) {
            case RunStatus::won:
            case RunStatus::stable: return kExitOk;
            case RunStatus::unwinnable: return kExitUnwinnable;
            case RunStatus::step_limit: return kExitStepLimit;
            }
        }

        if (*optimal) {
            const Instance inst = instance_from_string(read_input(file));
            SolveOptions options;
            options.method = parse_method(method);
            if (cap >= 0) options.radius_cap = cap;
            options.coset_budget = budget;
            const SolveReport report = verify_theorem(inst.graph, inst.divisor, choose_side(side, inst), options);
            Json j = report_to_json(report);
            if (explain) j["explain"] = shift_to_json(minimal_representative(report.greedy_aggregate));
            out << j.dump(2) << '\n';
            switch (report.status) {
            case ReportStatus::unwinnable: return kExitUnwinnable;
            case ReportStatus::step_limit: return kExitStepLimit;
            case ReportStatus::search_exhausted: return kExitSearchExhausted;
            case ReportStatus::ok: return report.holds ? kExitOk : kExitBoundViolated;
            }
        }

        if (*gen) {
            Instance inst;
            if (family == "intro") inst = intro_example();
            else if (family == "star") inst = star_example(n == 0 ? 5 : n, k);
            else if (family == "hybrid") inst = hybrid_example(n == 0 ? 4 : n, k);
            else inst = random_instance(n == 0 ? 5 : n, parse_rational(probability), {lo, hi}, seed);
            const std::string text = format == "dot" ? to_dot(inst.graph, inst.divisor, inst.name)
                                                     : instance_to_json(inst).dump(2) + "\n";
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream file_out(out_path);
                if (!file_out) throw Error(ErrorCode::InvalidParams, "cannot write " + out_path);
                file_out << text;
            }
            return kExitOk;
        }

        if (*serve) {
            GameService service(ServiceOptions{session_cap, 4});
            httplib::Server server;
            mount(server, service, static_dir);
            err << "listening on port " << port << '\n';
            if (!server.listen("0.0.0.0", port)) {
                err << "cannot bind port " << port << '\n';
                return kExitMalformed;
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    return kExitOk;
}

} // namespace chipfire
