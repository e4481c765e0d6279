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

#include "chipfire/renorm.hpp"

#include <algorithm>
#include <string>

namespace chipfire {

ShiftAnalysis minimal_representative(const FiringVector& v) {
    ShiftAnalysis out;
    out.input = v;
    out.input_norm = v.l1_norm();
    if (v.size() == 0) return out;

    std::vector<Chips> sorted = v.counts;
    const std::size_t median = (sorted.size() + 1) / 2 - 1;
    std::nth_element(sorted.begin(), sorted.begin() + median, sorted.end());
    out.shift = sorted[median];

    out.minimal = v;
    for (Chips& x : out.minimal.counts) {
        x = checked_sub(x, out.shift);
        if (x > 0) ++out.positives;
        else if (x < 0) ++out.negatives;
        else ++out.zeros;
    }
    out.minimal_norm = out.minimal.l1_norm();
    return out;
}

bool is_coset_minimal(const FiringVector& v) {
    return v.l1_norm() == minimal_representative(v).minimal_norm;
}

MoveBound lower_bound(std::int64_t m0, std::int64_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidN, "bound needs n >= 2, got " + std::to_string(n));
    if (m0 < 0) throw Error(ErrorCode::InvalidParams, "negative move count");
    Rational exact(m0, n - 1);
    return {exact, exact.ceil()};
}

} // namespace chipfire
