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

#include "qsym/state.h"

#include <random>

#include "qsym/error.h"

namespace qsym {

namespace {

using u128 = unsigned __int128;

void check_state_qubits(int m) {
    if (m < 1 || m > kMaxStateQubits) {
        fail(ErrorKind::SizeCap, "state qubit count " + std::to_string(m) + " outside [1, " +
                                     std::to_string(kMaxStateQubits) + "]");
    }
}

bool squared_sum(const Amplitudes &amps, u128 &out) {
    u128 total = 0;
    for (Eigen::Index k = 0; k < amps.size(); k++) {
        u128 a = static_cast<u128>(amps[k] < 0 ? -static_cast<__int128>(amps[k]) : amps[k]);
        u128 sq = a * a;
        if (total + sq < total) {
            return false;
        }
        total += sq;
    }
    out = total;
    return true;
}

}  // namespace

StateVector make_state(Amplitudes amps, int half_power) {
    auto size = static_cast<std::uint64_t>(amps.size());
    if (size < 2 || !std::has_single_bit(size)) {
        fail(ErrorKind::InvalidArgument, "amplitude count must be a power of two >= 2");
    }
    StateVector sv{std::countr_zero(size), std::move(amps), half_power};
    check_state_qubits(sv.m);
    if (!is_normalized(sv)) {
        fail(ErrorKind::InvalidArgument,
             "squared amplitudes do not sum to 2^" + std::to_string(half_power));
    }
    return sv;
}

bool is_normalized(const StateVector &sv) {
    if (sv.half_power < 0 || sv.half_power > 126) {
        return false;
    }
    u128 total;
    if (!squared_sum(sv.amps, total)) {
        return false;
    }
    return total == (u128{1} << sv.half_power);
}

std::string BasisKet::str() const {
    std::string s = sign < 0 ? "-|" : "+|";
    for (int k = m - 1; k >= 0; k--) {
        s += ((bits >> k) & 1) ? '1' : '0';
        if (k > 0) {
            s += ',';
        }
    }
    s += "⟩";
    return s;
}

StateVector basis_state(std::uint64_t bits, int sign, int m) {
    check_state_qubits(m);
    if (bits >= (std::uint64_t{1} << m)) {
        fail(ErrorKind::InvalidArgument, "basis index out of range for " + std::to_string(m) + " qubits");
    }
    if (sign != 1 && sign != -1) {
        fail(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    }
    StateVector sv{m, Amplitudes::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << m)), 0};
    sv.amps[static_cast<Eigen::Index>(bits)] = sign;
    return sv;
}

void hadamard_stage(StateVector &sv, int stage) {
    if (stage < 0 || stage >= sv.m) {
        fail(ErrorKind::InvalidArgument, "Hadamard stage out of range");
    }
    std::int64_t *a = sv.amps.data();
    std::uint64_t stride = std::uint64_t{1} << stage;
    std::uint64_t dim = sv.dim();
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t k = base; k < base + stride; k++) {
            std::int64_t u = a[k];
            std::int64_t v = a[k + stride];
            if (__builtin_add_overflow(u, v, &a[k]) || __builtin_sub_overflow(u, v, &a[k + stride])) {
                fail(ErrorKind::Overflow, "amplitude overflow in Hadamard layer");
            }
        }
    }
    sv.half_power += 1;
}

void reduce_scale(StateVector &sv) {
    if (sv.amps.isZero()) {
        return;
    }
    while (sv.half_power >= 2) {
        std::int64_t combined = 0;
        for (Eigen::Index k = 0; k < sv.amps.size(); k++) {
            combined |= sv.amps[k];
        }
        if (combined & 1) {
            return;
        }
        sv.amps /= 2;
        sv.half_power -= 2;
    }
}

StateVector hadamard_all(StateVector sv) {
    for (int stage = 0; stage < sv.m; stage++) {
        hadamard_stage(sv, stage);
    }
    reduce_scale(sv);
    return sv;
}

void swap_pair(StateVector &sv, std::uint64_t row) {
    auto k = static_cast<Eigen::Index>(2 * row);
    std::swap(sv.amps[k], sv.amps[k + 1]);
}

StateVector apply_oracle(StateVector sv, const TruthTable &tt) {
    if (sv.m != tt.num_qubits() + 1) {
        fail(ErrorKind::SizeMismatch, "oracle over " + std::to_string(tt.num_qubits()) +
                                          " inputs needs a state on " + std::to_string(tt.num_qubits() + 1) +
                                          " qubits, got " + std::to_string(sv.m));
    }
    auto words = tt.words();
    for (std::size_t w = 0; w < words.size(); w++) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            swap_pair(sv, w * 64 + b);
        }
    }
    return sv;
}

StateVector sandwich(const TruthTable &tt, const BasisKet &input) {
    int n = tt.num_qubits();
    if (input.m != n) {
        fail(ErrorKind::SizeMismatch,
             "input has " + std::to_string(input.m) + " data qubits, function has " + std::to_string(n));
    }
    StateVector sv = basis_state((input.bits << 1) | 1, input.sign, n + 1);
    sv = hadamard_all(std::move(sv));
    sv = apply_oracle(std::move(sv), tt);
    return hadamard_all(std::move(sv));
}

bool is_basis(const StateVector &sv) {
    if (sv.half_power % 2 != 0 || sv.half_power > 124) {
        return false;
    }
    __int128 unit = __int128{1} << (sv.half_power / 2);
    int nonzero = 0;
    for (Eigen::Index k = 0; k < sv.amps.size(); k++) {
        std::int64_t a = sv.amps[k];
        if (a == 0) {
            continue;
        }
        if (++nonzero > 1 || (a != unit && -static_cast<__int128>(a) != unit)) {
            return false;
        }
    }
    return nonzero == 1;
}

BasisKet read_basis(const StateVector &sv) {
    if (!is_basis(sv)) {
        fail(ErrorKind::NotBasis, "state is not a signed basis state");
    }
    Eigen::Index k = 0;
    while (sv.amps[k] == 0) {
        k++;
    }
    return BasisKet{sv.m, static_cast<std::uint64_t>(k), sv.amps[k] > 0 ? 1 : -1};
}

std::uint64_t measure(const StateVector &sv, std::uint64_t seed) {
    if (!is_normalized(sv)) {
        fail(ErrorKind::InvalidArgument, "cannot measure an unnormalized state");
    }
    if (sv.half_power > 64) {
        fail(ErrorKind::Overflow, "measurement weights exceed 64 bits");
    }
    // The weights sum to exactly 2^half_power, so the top bits of one draw give
    // an unbiased target.
    std::mt19937_64 rng(seed);
    u128 target = sv.half_power == 0 ? 0 : static_cast<u128>(rng() >> (64 - sv.half_power));
    u128 cumulative = 0;
    for (Eigen::Index k = 0; k < sv.amps.size(); k++) {
        auto a = static_cast<__int128>(sv.amps[k]);
        cumulative += static_cast<u128>(a * a);
        if (cumulative > target) {
            return static_cast<std::uint64_t>(k);
        }
    }
    return sv.dim() - 1;
}

std::string to_text(const StateVector &sv) {
    std::string s = "(";
    for (Eigen::Index k = 0; k < sv.amps.size(); k++) {
        if (k > 0) {
            s += ' ';
        }
        s += std::to_string(sv.amps[k]);
    }
    s += ')';
    if (sv.half_power > 0) {
        s += "/√2^" + std::to_string(sv.half_power);
    }
    return s;
}

}  // namespace qsym
