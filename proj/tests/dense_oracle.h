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

#ifndef QSYM_TESTS_DENSE_ORACLE_H
#define QSYM_TESTS_DENSE_ORACLE_H

// Reference constructions built from explicit matrices. They share nothing with
// the butterfly / pair-swap code paths and exist only to check them.

#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/KroneckerProduct>

#include "qsym/truth_table.h"

namespace qsym::testing {

using DenseMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using DenseVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline DenseMatrix hadamard_2x2() {
    DenseMatrix h(2, 2);
    h << 1, 1, 1, -1;
    return h;
}

/// H (x) H (x) ... (x) H, unnormalized.
inline DenseMatrix dense_hadamard(int m) {
    DenseMatrix r = hadamard_2x2();
    for (int k = 1; k < m; k++) {
        DenseMatrix next = Eigen::kroneckerProduct(r, hadamard_2x2()).eval();
        r = next;
    }
    return r;
}

/// U_f as a dense permutation matrix, written out from U_f|x,k> = |x, k ^ f(x)>
/// one column at a time.
inline DenseMatrix dense_oracle(const TruthTable &tt) {
    auto dim = static_cast<Eigen::Index>(std::uint64_t{2} << tt.num_qubits());
    DenseMatrix u = DenseMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        std::uint64_t x = static_cast<std::uint64_t>(col) >> 1;
        std::uint64_t k = static_cast<std::uint64_t>(col) & 1;
        std::uint64_t row = (x << 1) | (k ^ (tt[x] ? 1 : 0));
        u(static_cast<Eigen::Index>(row), col) = 1;
    }
    return u;
}

/// Kronecker expansion of a list of 2-vectors, first factor most significant.
inline DenseVector kron_vectors(const std::vector<DenseVector> &factors) {
    DenseVector r = factors.front();
    for (std::size_t k = 1; k < factors.size(); k++) {
        DenseVector next = Eigen::kroneckerProduct(r, factors[k]).eval();
        r = next;
    }
    return r;
}

inline DenseVector h_column(int y) {
    DenseVector v(2);
    v << 1, (y ? -1 : 1);
    return v;
}

/// sign * (x)_i H|y_i> expanded factor by factor.
inline DenseVector hadamard_product(int n, std::uint64_t y, int sign) {
    std::vector<DenseVector> factors;
    for (int i = 1; i <= n; i++) {
        factors.push_back(h_column(static_cast<int>((y >> (n - i)) & 1)));
    }
    return sign * kron_vectors(factors);
}

}  // namespace qsym::testing

#endif
