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

#ifndef CHIPFIRE_ERROR_HPP
#define CHIPFIRE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chipfire {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    IndexOutOfRange,
    DimensionMismatch,
    Overflow,
    InvalidN,
    InvalidParams,
    Unsatisfiable,
    GreedyFailed,
    PreconditionViolated,
    MalformedInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Overflow-checked 64-bit arithmetic. Chip counts grow linearly in the
// family parameters, so wraparound would silently corrupt bound checks.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
    return r;
}

inline std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) throw Error(ErrorCode::Overflow, "absolute value overflow");
    return a < 0 ? -a : a;
}

} // namespace chipfire

#endif
