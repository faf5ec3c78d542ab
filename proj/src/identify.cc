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

#include "qsym/identify.h"

#include <stdexcept>

#include "qsym/error.h"

namespace qsym {

StateVector HiddenOracle::apply(StateVector sv) const {
    queries_++;
    return apply_oracle(std::move(sv), table_);
}

bool BitOracle::operator()(std::uint64_t x) const {
    queries_++;
    return table_[x];
}

namespace {

StateVector run_pipeline(const HiddenOracle &oracle) {
    int n = oracle.num_inputs();
    StateVector sv = basis_state(1, 1, n + 1);
    sv = hadamard_all(std::move(sv));
    sv = oracle.apply(std::move(sv));
    return hadamard_all(std::move(sv));
}

}  // namespace

IdResult identify_amplitude(const HiddenOracle &oracle) {
    std::uint64_t before = oracle.queries();
    StateVector out = run_pipeline(oracle);
    if (!is_basis(out)) {
        fail(ErrorKind::PromiseViolated, "oracle output is not a basis state; the hidden function is not in the family");
    }
    BasisKet ket = read_basis(out);
    if ((ket.bits & 1) == 0) {
        fail(ErrorKind::PromiseViolated, "ancilla did not return to |1>");
    }
    return IdResult{oracle.num_inputs(), ket.bits >> 1, ket.sign < 0, oracle.queries() - before};
}

IdResult identify_measured(const HiddenOracle &oracle, std::uint64_t seed) {
    std::uint64_t before = oracle.queries();
    StateVector out = run_pipeline(oracle);
    std::uint64_t bits = measure(out, seed);
    return IdResult{oracle.num_inputs(), bits >> 1, std::nullopt, oracle.queries() - before};
}

std::pair<TruthTable, std::uint64_t> classical_identify_naive(const BitOracle &oracle) {
    std::uint64_t before = oracle.queries();
    TruthTable t(oracle.num_inputs());
    for (std::uint64_t x = 0; x < t.size(); x++) {
        t.set(x, oracle(x));
    }
    return {t, oracle.queries() - before};
}

std::pair<AffineForm, std::uint64_t> classical_identify_affine(const BitOracle &oracle) {
    std::uint64_t before = oracle.queries();
    int n = oracle.num_inputs();
    AffineForm af{n, 0, oracle(0)};
    for (int j = 0; j < n; j++) {
        std::uint64_t unit = std::uint64_t{1} << j;
        if (oracle(unit) != af.constant) {
            af.mask |= unit;
        }
    }
    return {af, oracle.queries() - before};
}

bool check_simon_invariance(const TruthTable &tt, std::uint64_t shift) {
    if (shift >= tt.size()) {
        fail(ErrorKind::SizeMismatch, "shift is wider than the function input");
    }
    AffineForm af = to_affine(tt);
    bool by_table = true;
    for (std::uint64_t x = 0; x < tt.size() && by_table; x++) {
        by_table = tt[x ^ shift] == tt[x];
    }
    bool by_form = !parity(af.mask & shift);
    if (by_table != by_form) {
        throw std::logic_error("Simon invariance: table and affine form disagree");
    }
    return by_table;
}

}  // namespace qsym
