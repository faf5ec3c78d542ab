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

#include "qsym/error.h"
#include "qsym/truth_table.h"

namespace qsym {

std::string to_bin(const TruthTable &t) {
    std::string s(t.size(), '0');
    for (std::uint64_t x = 0; x < t.size(); x++) {
        if (t[x]) {
            s[x] = '1';
        }
    }
    return s;
}

std::string to_hex(const TruthTable &t) {
    if (t.num_qubits() < 2) {
        fail(ErrorKind::InvalidArgument, "hex style needs n >= 2");
    }
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string s(t.size() / 4, '0');
    for (std::uint64_t d = 0; d < s.size(); d++) {
        int v = 0;
        for (int b = 0; b < 4; b++) {
            v = (v << 1) | (t[4 * d + b] ? 1 : 0);
        }
        s[d] = kDigits[v];
    }
    return s;
}

std::string to_dec(const TruthTable &t) {
    BigUint v = 0;
    for (std::uint64_t x = 0; x < t.size(); x++) {
        v <<= 1;
        if (t[x]) {
            v |= 1;
        }
    }
    return v.str();
}

std::string format(const TruthTable &t, Style style) {
    switch (style) {
        case Style::Bin:
            return to_bin(t);
        case Style::Hex:
            return to_hex(t);
        case Style::Dec:
            return to_dec(t);
    }
    return {};
}

BigUint capacity(int n) {
    if (n < 1) {
        fail(ErrorKind::InvalidArgument, "capacity needs n >= 1");
    }
    BigUint total = 0;
    BigUint binom = 1;
    for (int i = 0; i <= n; i++) {
        total += binom * (BigUint(1) << (n - i));
        binom = binom * (n - i) / (i + 1);
    }
    return total;
}

}  // namespace qsym
