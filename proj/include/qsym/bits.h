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

#ifndef QSYM_BITS_H
#define QSYM_BITS_H

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace qsym {

inline bool parity(std::uint64_t v) {
    return (std::popcount(v) & 1) != 0;
}

/// Reverses the low `width` bits of `v`.
inline std::uint64_t bit_reverse(std::uint64_t v, int width) {
    std::uint64_t r = 0;
    for (int k = 0; k < width; k++) {
        r = (r << 1) | ((v >> k) & 1);
    }
    return r;
}

inline std::uint64_t low_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// A fixed-width classical register. Qubit 1 is the most significant bit, so the
/// text form "1000" has value 8 at width 4.
struct BitString {
    int width = 0;
    std::uint64_t value = 0;

    static BitString parse(std::string_view text);
    std::string str() const;

    /// 1-based qubit index, qubit 1 most significant.
    bool qubit(int i) const {
        return ((value >> (width - i)) & 1) != 0;
    }

    bool operator==(const BitString &) const = default;
};

/// Bitwise XOR of two registers of equal width. Throws SizeMismatch otherwise.
BitString operator^(const BitString &a, const BitString &b);

}  // namespace qsym

#endif
