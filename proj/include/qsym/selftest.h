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

#ifndef QSYM_SELFTEST_H
#define QSYM_SELFTEST_H

#include <cstdint>
#include <string>
#include <vector>

#include "qsym/truth_table.h"

namespace qsym {

enum class FaultKind { None, DropStage, SkipSwap, SignFlip };

/// A deliberate defect in the pipeline: a Hadamard butterfly stage left out of
/// the first layer, a pair swap skipped inside the oracle, or one amplitude
/// negated between the oracle and the second layer.
struct Fault {
    FaultKind kind = FaultKind::None;
    std::uint64_t where = 0;

    /// "none", "drop-stage:K", "skip-swap:ROW" or "sign-flip:INDEX".
    static Fault parse(const std::string &text);
    std::string str() const;
};

struct SelftestReport {
    int n = 0;
    Fault fault;
    bool sampled = false;
    std::uint64_t cases = 0;
    std::uint64_t passed = 0;
    /// The first few failing cases, formatted for humans.
    std::vector<std::string> failures;

    bool ok() const {
        return passed == cases;
    }
};

/// Cases above this count are sampled rather than enumerated.
inline constexpr std::uint64_t kExhaustiveSelftestCases = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kSampledSelftestCases = 4096;

/// Runs every family function against every data input (or a seeded sample) and
/// compares the pipeline output with the flip-network prediction, sign included.
SelftestReport run_selftest(int n, const Fault &fault = {}, std::uint64_t seed = 0,
                            int max_qubits = kDefaultMaxQubits);

}  // namespace qsym

#endif
