// Copyright 2026 The qsym Authors
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

#ifndef QSYM_FACTOR_H
#define QSYM_FACTOR_H

#include <cstdint>

#include "qsym/state.h"

namespace qsym {

/// sign * H|y_1> (x) H|y_2> (x) ... (x) H|y_n>, with y_1 the most significant bit.
struct FactorResult {
    int n = 0;
    std::uint64_t y = 0;
    int sign = 1;

    bool operator==(const FactorResult &) const = default;
};

/// Splits a Hadamard-layer state into its qubit factors by halving: a second half
/// equal to the first means y_i = 0, a negated one means y_i = 1. The input must
/// carry half_power == m. Throws NotFactorable for anything else.
FactorResult factor_state(const StateVector &sv);

/// Inverse of factor_state: the amplitudes of sign * (x)_i H|y_i>, half_power n.
StateVector hadamard_product_state(int n, std::uint64_t y, int sign);

}  // namespace qsym

#endif
