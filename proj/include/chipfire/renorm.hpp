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

#ifndef CHIPFIRE_RENORM_HPP
#define CHIPFIRE_RENORM_HPP

#include <cstdint>

#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

/// A firing vector and its shortest representative modulo the all-ones
/// kernel of the Laplacian. Both reach the same divisor.
struct ShiftAnalysis {
    FiringVector input;
    Chips shift = 0;
    FiringVector minimal;  // input - shift * 1
    Chips input_norm = 0;
    Chips minimal_norm = 0;
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;
};

/// Shifts by the lower median, the ceil(n/2)-th smallest entry. Any
/// shift between the two middle order statistics minimizes the L1 norm;
/// the lower one is picked so outputs are deterministic.
ShiftAnalysis minimal_representative(const FiringVector& v);

/// True iff no shift of v by a multiple of the all-ones vector is shorter.
bool is_coset_minimal(const FiringVector& v);

struct MoveBound {
    Rational exact;        // m0 / (n - 1)
    std::int64_t ceiling;  // smallest integer move count meeting it
};

/// Lower bound on the distance to the closest stable divisor given the
/// greedy move count m0 on a graph with n vertices. Throws InvalidN for n < 2.
MoveBound lower_bound(std::int64_t m0, std::int64_t n);

} // namespace chipfire

#endif
