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

#include "chipfire/rational.hpp"

#include <numeric>

#include "chipfire/error.hpp"

namespace chipfire {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
}

std::int64_t Rational::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    auto parse_int = [&s](const std::string& part) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw Error(ErrorCode::InvalidParams, "not a rational: '" + s + "'");
        return static_cast<std::int64_t>(v);
    };
    if (auto slash = s.find('/'); slash != std::string::npos)
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 12) throw Error(ErrorCode::InvalidParams, "not a rational: '" + s + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::string whole = s.substr(0, dot);
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        const std::int64_t f = parse_int(frac);
        if (f < 0) throw Error(ErrorCode::InvalidParams, "not a rational: '" + s + "'");
        const std::int64_t mag = checked_add(checked_mul(w < 0 ? -w : w, scale), f);
        return Rational(negative ? -mag : mag, scale);
    }
    return Rational(parse_int(s));
}

} // namespace chipfire
