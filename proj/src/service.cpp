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

#include "chipfire/service.hpp"

#include "httplib.h"

#include <random>
#include <sstream>

namespace chipfire {

namespace {

Reply error_reply(int status, const std::string& message) {
    return {status, Json{{"error", message}}};
}

class SolverSlot {
public:
    explicit SolverSlot(std::counting_semaphore<1024>& s) : s_(s) { s_.acquire(); }
    ~SolverSlot() { s_.release(); }
    SolverSlot(const SolverSlot&) = delete;
    SolverSlot& operator=(const SolverSlot&) = delete;

private:
    std::counting_semaphore<1024>& s_;
};

// Accepts either a bare instance or {"instance": {...}}.
Instance parse_instance_body(const std::string& body) {
    Json j;
    try {
        j = Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, "$: invalid JSON at byte " + std::to_string(e.byte));
    }
    if (j.is_object() && j.contains("instance") && !j.contains("num_vertices")) return instance_from_json(j["instance"]);
    return instance_from_json(j);
}

std::int64_t param_int(const std::map<std::string, std::string>& params, const std::string& key,
                       std::int64_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != it->second.size())
        throw Error(ErrorCode::InvalidParams, "parameter " + key + " must be an integer");
    return value;
}

} // namespace

GameService::GameService(ServiceOptions options)
    : options_(options), solver_slots_(std::max<std::ptrdiff_t>(1, std::min<std::ptrdiff_t>(options.solver_slots, 1024))) {}

std::size_t GameService::session_count() const {
    std::lock_guard lock(table_mutex_);
    return sessions_.size();
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
    std::lock_guard lock(table_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    recency_.splice(recency_.begin(), recency_, it->second.second);
    return it->second.first;
}

Json GameService::state_json(const Session& s) const {
    Json j;
    j["id"] = s.id;
    j["state"] = divisor_to_json(s.current);
    j["move_count"] = s.moves.size();
    j["is_effective"] = is_effective(s.current);
    j["is_stable"] = is_stable(s.instance.graph, s.current);
    j["m0"] = s.m0 ? Json(*s.m0) : Json(nullptr);
    j["bound"] = s.bound ? rational_to_json(*s.bound) : Json(nullptr);
    return j;
}

Reply GameService::create_game(const std::string& body) {
    auto session = std::make_shared<Session>();
    try {
        session->instance = parse_instance_body(body);
    } catch (const Error& e) {
        return error_reply(400, e.what());
    }
    session->current = session->instance.divisor;
    session->created_at = std::chrono::system_clock::now();
    {
        SolverSlot slot(solver_slots_);
        const RunResult run = borrowing_binge(session->instance.graph, session->current, RunOptions{{}, 1'000'000, false});
        if (run.succeeded()) {
            session->m0 = run.trace.move_count;
            const auto n = static_cast<std::int64_t>(session->instance.graph.num_vertices());
            session->bound = n >= 2 ? lower_bound(*session->m0, n).exact : Rational(0);
        }
    }

    {
        std::lock_guard lock(table_mutex_);
        std::ostringstream id;
        id << std::hex << next_id_++ << '-' << std::random_device{}() % 0x10000;
        session->id = id.str();
        recency_.push_front(session->id);
        sessions_[session->id] = {session, recency_.begin()};
        while (sessions_.size() > options_.session_cap) {
            sessions_.erase(recency_.back());
            recency_.pop_back();
        }
    }
    std::lock_guard lock(session->mutex);
    return {201, Json{{"id", session->id}, {"state", divisor_to_json(session->current)}}};
}

Reply GameService::get_game(const std::string& id) {
    auto s = find(id);
    if (!s) return error_reply(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    return {200, state_json(*s)};
}

Reply GameService::play_move(const std::string& id, const std::string& body) {
    auto s = find(id);
    if (!s) return error_reply(404, "unknown game " + id);
    Json j;
    try {
        j = Json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
        return error_reply(400, "$: invalid JSON");
    }
    if (!j.is_object() || !j.contains("vertex") || !j.contains("kind"))
        return error_reply(400, "$: expected {\"vertex\": i, \"kind\": \"lend\"|\"borrow\"}");
    if (!j["vertex"].is_number_integer()) return error_reply(400, "$.vertex: expected an integer");
    if (!j["kind"].is_string()) return error_reply(400, "$.kind: expected a string");
    const auto vertex = j["vertex"].get<std::int64_t>();
    const auto kind_text = j["kind"].get<std::string>();
    if (kind_text != "lend" && kind_text != "borrow")
        return error_reply(422, "$.kind: must be \"lend\" or \"borrow\"");

    std::lock_guard lock(s->mutex);
    if (vertex < 0 || vertex >= static_cast<std::int64_t>(s->instance.graph.num_vertices()))
        return error_reply(422, "$.vertex: no vertex " + std::to_string(vertex));
    const Move m{static_cast<Vertex>(vertex), kind_text == "lend" ? MoveKind::lend : MoveKind::borrow};
    try {
        Divisor next = single_move(s->instance.graph, s->current, m);
        s->history.push_back(std::move(s->current));
        s->current = std::move(next);
        s->moves.push_back(m);
    } catch (const Error& e) {
        return error_reply(422, e.what());
    }
    return {200, state_json(*s)};
}

Reply GameService::undo(const std::string& id) {
    auto s = find(id);
    if (!s) return error_reply(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    if (s->history.empty()) return error_reply(422, "nothing to undo");
    s->current = std::move(s->history.back());
    s->history.pop_back();
    s->moves.pop_back();
    return {200, state_json(*s)};
}

Reply GameService::hint(const std::string& id, const std::string& strategy) {
    if (strategy != "greedy" && strategy != "optimal")
        return error_reply(400, "strategy must be greedy or optimal");
    auto s = find(id);
    if (!s) return error_reply(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    if (is_effective(s->current)) return {204, nullptr};
    const Graph& g = s->instance.graph;

    if (strategy == "greedy") {
        Vertex v = 0;
        while (s->current[v] >= 0) ++v;
        RunResult run;
        {
            SolverSlot slot(solver_slots_);
            run = borrowing_binge(g, s->current, RunOptions{{}, 1'000'000, false});
        }
        Json j{{"vertex", v},
               {"kind", "borrow"},
               {"rationale", "vertex " + std::to_string(v) + " is in debt (" + std::to_string(s->current[v]) +
                                 "); the borrowing binge borrows on the lowest-index debtor"}};
        j["remaining_estimate"] = run.succeeded() ? Json(run.trace.move_count) : Json(nullptr);
        return {200, j};
    }

    if (auto memo = s->optimal_hints.find(s->current); memo != s->optimal_hints.end()) return {200, memo->second};
    SolverSlot slot(solver_slots_);
    const RunResult run = borrowing_binge(g, s->current, RunOptions{{}, 1'000'000, false});
    if (!run.succeeded()) return error_reply(409, "greedy binge does not finish from this state; no search radius");
    BfsOptions bfs;
    bfs.radius_cap = run.trace.move_count;
    const BfsResult found = bfs_min_moves(g, s->current, Target::effective, bfs);
    if (!found.found()) return error_reply(409, std::string("search stopped: ") + std::string(to_string(found.status)));
    const Move first = found.witness.front();
    Json j{{"vertex", first.vertex},
           {"kind", std::string(to_string(first.kind))},
           {"rationale", "first move of a shortest sequence to an effective divisor (" +
                             std::to_string(found.m_min) + " moves)"},
           {"remaining_estimate", found.m_min}};
    s->optimal_hints.emplace(s->current, j);
    return {200, j};
}

Reply GameService::analyze(const std::string& body, const std::string& side_text) {
    Instance inst;
    Side side = Side::dollar;
    try {
        inst = parse_instance_body(body);
        if (!side_text.empty()) side = parse_side(side_text);
        else if (inst.expected) side = inst.expected->side;
    } catch (const Error& e) {
        return error_reply(400, e.what());
    }
    SolveReport report;
    try {
        SolverSlot slot(solver_slots_);
        report = verify_theorem(inst.graph, inst.divisor, side);
    } catch (const Error& e) {
        return error_reply(409, e.what());
    }
    if (report.status == ReportStatus::search_exhausted) return {409, report_to_json(report)};
    return {200, report_to_json(report)};
}

Reply GameService::family(const std::string& name, const std::map<std::string, std::string>& params) {
    try {
        Instance inst;
        if (name == "intro") inst = intro_example();
        else if (name == "star") inst = star_example(param_int(params, "n", 5), param_int(params, "k", 2));
        else if (name == "hybrid") inst = hybrid_example(param_int(params, "n", 4), param_int(params, "k", 1));
        else if (name == "random") {
            auto p = params.find("p");
            inst = random_instance(param_int(params, "n", 5), parse_rational(p == params.end() ? "1/2" : p->second),
                                   {param_int(params, "lo", -3), param_int(params, "hi", 3)},
                                   static_cast<std::uint64_t>(param_int(params, "seed", 0)));
        } else {
            return error_reply(404, "unknown family " + name);
        }
        return {200, instance_to_json(inst)};
    } catch (const Error& e) {
        return error_reply(400, e.what());
    }
}

void mount(httplib::Server& server, GameService& service, const std::string& static_dir) {
    auto send = [](httplib::Response& res, const Reply& reply) {
        res.status = reply.status;
        if (reply.status != 204) res.set_content(reply.body.dump(), "application/json");
    };

    server.Post("/api/games", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.create_game(req.body));
    });
    server.Get(R"(/api/games/([^/]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.get_game(req.matches[1]));
    });
    server.Post(R"(/api/games/([^/]+)/moves)", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.play_move(req.matches[1], req.body));
    });
    server.Post(R"(/api/games/([^/]+)/undo)", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.undo(req.matches[1]));
    });
    server.Get(R"(/api/games/([^/]+)/hint)", [&service, send](const httplib::Request& req, httplib::Response& res) {
        const std::string strategy = req.has_param("strategy") ? req.get_param_value("strategy") : "greedy";
        send(res, service.hint(req.matches[1], strategy));
    });
    server.Post("/api/analyze", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.analyze(req.body, req.has_param("side") ? req.get_param_value("side") : ""));
    });
    server.Get(R"(/api/families/([^/]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
        std::map<std::string, std::string> params;
        for (const auto& [k, v] : req.params) params.emplace(k, v);
        send(res, service.family(req.matches[1], params));
    });
    if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

} // namespace chipfire
