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

#ifndef CHIPFIRE_SERVICE_HPP
#define CHIPFIRE_SERVICE_HPP

#include <chrono>
#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <unordered_map>
#include <vector>

#include "chipfire/io.hpp"

namespace httplib {
class Server;
}

namespace chipfire {

struct Reply {
    int status = 200;
    Json body;  // null for 204
};

struct ServiceOptions {
    std::size_t session_cap = 1024;
    /// Concurrent solver calls allowed across all requests.
    std::ptrdiff_t solver_slots = 4;
};

/// In-memory dollar-game sessions for the playground. Every method takes
/// the raw request payload and returns status plus JSON body, so the HTTP
/// layer is a thin adapter.
///
/// The session table is LRU-evicted at session_cap. Mutations of one
/// session are serialized by a per-session lock.
class GameService {
public:
    explicit GameService(ServiceOptions options = {});

    Reply create_game(const std::string& body);
    Reply get_game(const std::string& id);
    Reply play_move(const std::string& id, const std::string& body);
    Reply undo(const std::string& id);
    /// strategy is "greedy" or "optimal". 204 when already effective.
    Reply hint(const std::string& id, const std::string& strategy);
    /// side may be empty: then the instance's expected side, else dollar.
    Reply analyze(const std::string& body, const std::string& side = "");
    Reply family(const std::string& name, const std::map<std::string, std::string>& params);

    std::size_t session_count() const;

private:
    struct Session {
        std::string id;
        Instance instance;
        Divisor current;
        std::vector<Move> moves;
        std::vector<Divisor> history;  // states before each move
        std::chrono::system_clock::time_point created_at;
        std::optional<std::int64_t> m0;
        std::optional<Rational> bound;
        std::unordered_map<Divisor, Json, DivisorHash> optimal_hints;
        std::mutex mutex;
    };

    std::shared_ptr<Session> find(const std::string& id);
    Json state_json(const Session& s) const;

    ServiceOptions options_;
    mutable std::mutex table_mutex_;
    std::list<std::string> recency_;
    std::unordered_map<std::string, std::pair<std::shared_ptr<Session>, std::list<std::string>::iterator>> sessions_;
    std::uint64_t next_id_ = 1;
    std::counting_semaphore<1024> solver_slots_;
};

/// Wires the service's endpoints (and static assets, if a directory is
/// given) onto an httplib server.
void mount(httplib::Server& server, GameService& service, const std::string& static_dir = "");

} // namespace chipfire

#endif
