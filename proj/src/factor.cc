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

#include "qsym/factor.h"

#include "qsym/bits.h"
#include "qsym/error.h"

namespace qsym {

FactorResult factor_state(const StateVector &sv) {
    if (sv.half_power != sv.m) {
        fail(ErrorKind::InvalidArgument, "factoring expects half_power == " + std::to_string(sv.m) + ", got " +
                                             std::to_string(sv.half_power));
    }
    const Amplitudes &a = sv.amps;
    FactorResult out{sv.m, 0, 1};
    Eigen::Index len = a.size();
    for (int i = 1; i <= sv.m; i++) {
        Eigen::Index half = len / 2;
        auto first = a.head(half);
        auto second = a.segment(half, half);
        if (second == first) {
            // symmetric: H|0>
        } else if (second == -first) {
            out.y |= std::uint64_t{1} << (sv.m - i);
        } else {
            fail(ErrorKind::NotFactorable, "qubit " + std::to_string(i) + " is neither symmetric nor anti-symmetric");
        }
        len = half;
    }
    if (a[0] != 1 && a[0] != -1) {
        fail(ErrorKind::NotFactorable, "amplitudes are not all of unit magnitude");
    }
    out.sign = a[0] > 0 ? 1 : -1;
    return out;
}

StateVector hadamard_product_state(int n, std::uint64_t y, int sign) {
    StateVector sv = basis_state(y, sign, n);
    Amplitudes &a = sv.amps;
    for (Eigen::Index k = 0; k < a.size(); k++) {
        a[k] = parity(y & static_cast<std::uint64_t>(k)) ? -sign : sign;
    }
    sv.half_power = n;
    return sv;
}

}  // namespace qsym
