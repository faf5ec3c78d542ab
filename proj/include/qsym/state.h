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

#ifndef QSYM_STATE_H
#define QSYM_STATE_H

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "qsym/truth_table.h"

namespace qsym {

/// Exact amplitudes. Every quantity the pipeline produces is an integer multiple of
/// a power of 1/sqrt(2), so no floating point is involved anywhere.
using Amplitudes = Eigen::VectorX<std::int64_t>;

inline constexpr int kMaxStateQubits = 30;

/// The physical amplitude at index k is amps[k] * 2^(-half_power / 2). Index bits
/// run data qubit x_1 (most significant) down to the ancilla (least significant).
struct StateVector {
    int m = 0;
    Amplitudes amps;
    int half_power = 0;

    std::uint64_t dim() const {
        return std::uint64_t{1} << m;
    }
    bool operator==(const StateVector &other) const {
        return m == other.m && half_power == other.half_power && amps == other.amps;
    }
};

/// Builds a state from raw amplitudes, checking the length and that the squared
/// amplitudes sum to exactly 2^half_power.
StateVector make_state(Amplitudes amps, int half_power);

/// sum amps^2 == 2^half_power, evaluated without overflow.
bool is_normalized(const StateVector &sv);

/// A signed computational basis state, e.g. +|1,0,1> or -|0,0,1>.
struct BasisKet {
    int m = 0;
    std::uint64_t bits = 0;
    int sign = 1;

    /// Ket notation with the sign in front: "+|1,0,1>" (using the unicode angle).
    std::string str() const;
    bool operator==(const BasisKet &) const = default;
};

StateVector basis_state(std::uint64_t bits, int sign, int m);
inline StateVector basis_state(const BasisKet &ket) {
    return basis_state(ket.bits, ket.sign, ket.m);
}

/// One butterfly layer of the Walsh-Hadamard transform acting on index bit `stage`
/// (stage 0 is the ancilla). Adds one to half_power. Throws Overflow.
void hadamard_stage(StateVector &sv, int stage);

/// Divides out common factors of two while half_power allows it.
void reduce_scale(StateVector &sv);

/// R^(m) via the unnormalized fast Walsh-Hadamard transform, then reduce_scale.
StateVector hadamard_all(StateVector sv);

/// Swaps the amplitudes at 2*row and 2*row + 1.
void swap_pair(StateVector &sv, std::uint64_t row);

/// U_f |x, k> = |x, k ^ f(x)>: a pair swap for every row with f(x) = 1. Works for
/// any table; requires sv.m == tt.num_qubits() + 1.
StateVector apply_oracle(StateVector sv, const TruthTable &tt);

/// R^(n+1) U_f R^(n+1) applied to |x, 1>, where `input` holds the n data bits.
StateVector sandwich(const TruthTable &tt, const BasisKet &input);

/// Throws NotBasis unless exactly one amplitude is nonzero and has unit magnitude.
BasisKet read_basis(const StateVector &sv);
bool is_basis(const StateVector &sv);

/// Born-rule sample using the exact integer weights amps[k]^2 / 2^half_power.
std::uint64_t measure(const StateVector &sv, std::uint64_t seed);

/// "(1 -1 1 -1)/√2^2", or the bare vector when half_power is zero.
std::string to_text(const StateVector &sv);

}  // namespace qsym

#endif
