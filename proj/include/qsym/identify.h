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

#ifndef QSYM_IDENTIFY_H
#define QSYM_IDENTIFY_H

#include <cstdint>
#include <optional>
#include <utility>

#include "qsym/bits.h"
#include "qsym/state.h"
#include "qsym/truth_table.h"

namespace qsym {

/// A sealed U_f: callers may push states through it but cannot read the table.
/// Each call to apply() counts as one superposition query.
class HiddenOracle {
   public:
    explicit HiddenOracle(TruthTable table) : table_(std::move(table)) {
    }

    int num_inputs() const {
        return table_.num_qubits();
    }
    StateVector apply(StateVector sv) const;
    std::uint64_t queries() const {
        return queries_;
    }

   private:
    TruthTable table_;
    mutable std::uint64_t queries_ = 0;
};

/// Classical access to f: one evaluation per call.
class BitOracle {
   public:
    explicit BitOracle(TruthTable table) : table_(std::move(table)) {
    }

    int num_inputs() const {
        return table_.num_qubits();
    }
    bool operator()(std::uint64_t x) const;
    std::uint64_t queries() const {
        return queries_;
    }

   private:
    TruthTable table_;
    mutable std::uint64_t queries_ = 0;
};

struct IdResult {
    int n = 0;
    std::uint64_t mask = 0;
    /// Empty when the readout cannot see the global phase.
    std::optional<bool> constant;
    std::uint64_t query_count = 0;
};

/// Prepares |0...0, 1>, runs H, one oracle call, H and reads the basis state
/// directly, so the sign (and hence the constant) is recovered as well.
/// Throws PromiseViolated when the output is not a basis state.
IdResult identify_amplitude(const HiddenOracle &oracle);

/// Same pipeline terminated by a Born-rule measurement; constant stays unknown.
IdResult identify_measured(const HiddenOracle &oracle, std::uint64_t seed);

/// Queries every input.
std::pair<TruthTable, std::uint64_t> classical_identify_naive(const BitOracle &oracle);

/// Uses the family promise: f(0) gives the constant and f(e_i) ^ f(0) gives mask bit i.
std::pair<AffineForm, std::uint64_t> classical_identify_affine(const BitOracle &oracle);

/// The Simon shift relating two inputs: x ^ y. Throws SizeMismatch.
inline BitString xi(const BitString &x, const BitString &y) {
    return x ^ y;
}

/// True iff f(x ^ shift) == f(x) for all x. Computed both by exhaustive table
/// comparison and from the affine form; a disagreement is a logic error.
/// Throws NotInFamily for tables outside the family.
bool check_simon_invariance(const TruthTable &tt, std::uint64_t shift);

}  // namespace qsym

#endif
