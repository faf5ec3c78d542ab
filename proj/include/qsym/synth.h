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

#ifndef QSYM_SYNTH_H
#define QSYM_SYNTH_H

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qsym/bits.h"
#include "qsym/state.h"
#include "qsym/truth_table.h"

namespace qsym {

/// Gate-level equivalent of a sandwiched family oracle: an X on every listed data
/// line and, for negative functions, a -1 on the ancilla line.
struct FlipNetwork {
    int n = 0;
    /// 1-based data-qubit indices, qubit 1 most significant, ascending.
    std::vector<int> flips;
    bool phase = false;

    /// Acts on a ket over n data qubits plus the ancilla.
    BasisKet apply(const BasisKet &input) const;

    /// One "X q<i>" line per flip, then "Z-phase" when the phase bit is set.
    std::string str() const;

    bool operator==(const FlipNetwork &) const = default;
};

FlipNetwork synthesize(const AffineForm &af);

/// Position of a positive function in ascending order: a..z, then "#26", "#27"...
struct FunctionId {
    int n = 0;
    std::uint64_t ordinal = 0;

    static FunctionId of(const AffineForm &af);
    static FunctionId parse(int n, const std::string &text);
    AffineForm form() const;
    std::string str() const;

    bool operator==(const FunctionId &) const = default;
};

struct FunctionSolution {
    AffineForm form;
    TruthTable table;
    FunctionId id;
};

/// The positive function taking |x, 1> to |y, 1>: mask = x ^ y.
FunctionSolution solve_function(const BitString &x, const BitString &y);

/// Output data bits for a positive function applied to |x, 1>. Throws NotInFamily
/// for tables outside the family and InvalidArgument for negative ones.
BitString solve_output(const BitString &x, const TruthTable &tt);

inline constexpr int kMaxTable5Qubits = 8;

/// ids(x, y) is the ordinal of the positive function sending input x to output y.
struct Table5 {
    int n = 0;
    Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic> ids;

    FunctionId at(std::uint64_t x, std::uint64_t y) const {
        return FunctionId{n, ids(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y))};
    }
};

Table5 table5(int n);

/// Row/column label in the |x,1> style, e.g. "10001".
std::string ket_label(int n, std::uint64_t bits);

enum class TableFormat { Text, Csv, Json };
/// Rows are outputs, columns inputs, as in the printed table.
std::string render_table5(const Table5 &t, TableFormat format);

struct Table5Report {
    bool xor_coset = true;
    bool symmetric = true;
    bool latin = true;
    bool identity_diagonal = true;
    std::vector<std::string> violations;

    bool ok() const {
        return violations.empty();
    }
};

/// (i) entries depend only on x ^ y, (ii) symmetric, (iii) Latin square,
/// (iv) diagonal is function a.
Table5Report check_table5_structure(const Table5 &t);

}  // namespace qsym

#endif
