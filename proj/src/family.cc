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

#include <algorithm>

#include "qsym/bits.h"
#include "qsym/error.h"
#include "qsym/truth_table.h"

namespace qsym {

namespace {

/// Sorted list for n = 1 from the two constants: each constant is followed by
/// itself and then by its mirror image in the list (the other constant).
std::vector<TruthTable> seed_generation() {
    std::vector<TruthTable> out;
    for (int c = 0; c < 2; c++) {
        for (int second : {c, 1 - c}) {
            TruthTable t(1);
            t.set(0, c != 0);
            t.set(1, second != 0);
            out.push_back(t);
        }
    }
    return out;
}

std::vector<TruthTable> next_generation(const std::vector<TruthTable> &sorted) {
    std::size_t count = sorted.size();
    std::vector<TruthTable> out;
    out.reserve(2 * count);
    for (std::size_t i = 0; i < count; i++) {
        out.push_back(TruthTable::concat(sorted[i], sorted[i]));
        out.push_back(TruthTable::concat(sorted[i], sorted[count - 1 - i]));
    }
    return out;
}

}  // namespace

std::vector<TruthTable> family_generation_order(int n, int max_qubits) {
    check_qubit_count(n, max_qubits);
    std::vector<TruthTable> current = seed_generation();
    for (int level = 2; level <= n; level++) {
        std::sort(current.begin(), current.end());
        current = next_generation(current);
    }
    return current;
}

std::vector<TruthTable> construct_family(int n, int max_qubits) {
    auto family = family_generation_order(n, max_qubits);
    std::sort(family.begin(), family.end());
    return family;
}

TruthTable family_member(int n, std::uint64_t k, int max_qubits) {
    check_qubit_count(n, max_qubits);
    std::uint64_t half = std::uint64_t{1} << n;
    if (k >= 2 * half) {
        fail(ErrorKind::InvalidArgument, "family index out of range");
    }
    // In ascending order, positive 2j+1 is P_j followed by its complement and
    // positive 2j is P_j doubled; among negatives the roles of the two swap.
    bool negative = k >= half;
    std::uint64_t index = negative ? k - half : k;
    TruthTable t(1);
    t.set(0, negative);
    bool first = ((index >> (n - 1)) & 1) != 0;
    t.set(1, first);
    for (int level = 2; level <= n; level++) {
        bool bit = ((index >> (n - level)) & 1) != 0;
        bool flip = negative ? !bit : bit;
        t = TruthTable::concat(t, flip ? ~t : t);
    }
    return t;
}

}  // namespace qsym
