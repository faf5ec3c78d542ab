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

#include "qsym/bits.h"

#include "qsym/error.h"

namespace qsym {

BitString BitString::parse(std::string_view text) {
    if (text.empty() || text.size() > 63) {
        fail(ErrorKind::InvalidArgument, "bit string must have 1..63 characters, got '" + std::string(text) + "'");
    }
    BitString out{static_cast<int>(text.size()), 0};
    for (char c : text) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::InvalidArgument, "bit string may only contain 0 and 1: '" + std::string(text) + "'");
        }
        out.value = (out.value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return out;
}

std::string BitString::str() const {
    std::string s(width, '0');
    for (int k = 0; k < width; k++) {
        if ((value >> (width - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

BitString operator^(const BitString &a, const BitString &b) {
    if (a.width != b.width) {
        fail(ErrorKind::SizeMismatch,
             "register widths differ: " + std::to_string(a.width) + " vs " + std::to_string(b.width));
    }
    return {a.width, a.value ^ b.value};
}

}  // namespace qsym
