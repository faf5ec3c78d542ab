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

#include "qsym/truth_table.h"

#include <algorithm>
#include <bit>

#include "qsym/bits.h"
#include "qsym/error.h"

namespace qsym {

namespace {

std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

/// Bits of the single storage word that are in use.
std::uint64_t used_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : low_mask(1 << n);
}

/// Patterns of index bits 0..5 across one 64-entry word.
constexpr std::uint64_t kIndexBitPattern[6] = {
    0xAAAAAAAAAAAAAAAAull,
    0xCCCCCCCCCCCCCCCCull,
    0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull,
    0xFFFF0000FFFF0000ull,
    0xFFFFFFFF00000000ull,
};

}  // namespace

void check_qubit_count(int n, int max_qubits) {
    int cap = std::min(max_qubits, kHardMaxQubits);
    if (n < 1 || n > cap) {
        fail(ErrorKind::SizeCap, "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
    }
}

bool AffineForm::operator()(std::uint64_t x) const {
    return parity(mask & x) != constant;
}

const char *classification_name(Classification c) {
    switch (c) {
        case Classification::Positive:
            return "Positive";
        case Classification::Negative:
            return "Negative";
        case Classification::Neither:
            return "Neither";
    }
    return "?";
}

TruthTable::TruthTable(int n) : n_(n) {
    check_qubit_count(n, kHardMaxQubits);
    words_.assign(word_count(n), 0);
}

TruthTable TruthTable::from_bin(std::string_view bin) {
    std::size_t len = bin.size();
    if (len < 2 || !std::has_single_bit(len)) {
        fail(ErrorKind::InvalidArgument, "bin pattern length must be a power of two >= 2, got " + std::to_string(len));
    }
    TruthTable t(std::countr_zero(len));
    for (std::size_t x = 0; x < len; x++) {
        char c = bin[x];
        if (c != '0' && c != '1') {
            fail(ErrorKind::InvalidArgument, "bin pattern may only contain 0 and 1");
        }
        t.set(x, c == '1');
    }
    return t;
}

TruthTable TruthTable::from_hex(std::string_view hex, int n) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
        hex.remove_prefix(2);
    } else if (!hex.empty() && hex[0] == '$') {
        hex.remove_prefix(1);
    }
    std::size_t digits = hex.size();
    if (n == 0) {
        if (digits == 0 || !std::has_single_bit(digits)) {
            fail(ErrorKind::InvalidArgument,
                 "cannot infer qubit count from " + std::to_string(digits) + " hex digits");
        }
        n = std::countr_zero(digits) + 2;
    }
    if (n < 2) {
        fail(ErrorKind::InvalidArgument, "hex patterns need n >= 2");
    }
    check_qubit_count(n, kHardMaxQubits);
    std::uint64_t expected = (std::uint64_t{1} << n) / 4;
    if (digits != expected) {
        fail(ErrorKind::SizeMismatch, "expected " + std::to_string(expected) + " hex digits for n=" +
                                          std::to_string(n) + ", got " + std::to_string(digits));
    }
    TruthTable t(n);
    for (std::size_t d = 0; d < digits; d++) {
        char c = hex[d];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            fail(ErrorKind::InvalidArgument, std::string("invalid hex digit '") + c + "'");
        }
        for (int b = 0; b < 4; b++) {
            t.set(4 * d + b, ((v >> (3 - b)) & 1) != 0);
        }
    }
    return t;
}

TruthTable TruthTable::concat(const TruthTable &low, const TruthTable &high) {
    if (low.n_ != high.n_) {
        fail(ErrorKind::SizeMismatch, "cannot concatenate tables of different sizes");
    }
    TruthTable out(low.n_ + 1);
    if (low.n_ >= 6) {
        std::copy(low.words_.begin(), low.words_.end(), out.words_.begin());
        std::copy(high.words_.begin(), high.words_.end(), out.words_.begin() + low.words_.size());
    } else {
        out.words_[0] = low.words_[0] | (high.words_[0] << (1 << low.n_));
    }
    return out;
}

void TruthTable::set(std::uint64_t x, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (value) {
        words_[x >> 6] |= bit;
    } else {
        words_[x >> 6] &= ~bit;
    }
}

std::uint64_t TruthTable::count_ones() const {
    std::uint64_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

TruthTable &TruthTable::operator^=(const TruthTable &other) {
    if (n_ != other.n_) {
        fail(ErrorKind::SizeMismatch,
             "tables over " + std::to_string(n_) + " and " + std::to_string(other.n_) + " inputs");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

std::strong_ordering TruthTable::operator<=>(const TruthTable &other) const {
    if (n_ != other.n_) {
        return n_ <=> other.n_;
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        std::uint64_t diff = words_[k] ^ other.words_[k];
        if (diff != 0) {
            // The lowest differing entry is the most significant differing digit.
            std::uint64_t bit = std::uint64_t{1} << std::countr_zero(diff);
            return (words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

TruthTable operator^(TruthTable a, const TruthTable &b) {
    a ^= b;
    return a;
}

TruthTable operator~(const TruthTable &t) {
    TruthTable out = t;
    std::uint64_t keep = used_mask(t.num_qubits());
    for (auto &w : out.words()) {
        w = ~w & keep;
    }
    return out;
}

TruthTable complement(const TruthTable &t) {
    return ~t;
}

TruthTable mirror(const TruthTable &t) {
    int n = t.num_qubits();
    TruthTable out(n);
    auto src = t.words();
    auto dst = out.words();
    if (n >= 6) {
        std::size_t count = src.size();
        for (std::size_t k = 0; k < count; k++) {
            dst[count - 1 - k] = bit_reverse(src[k], 64);
        }
    } else {
        int len = 1 << n;
        dst[0] = bit_reverse(src[0], len);
    }
    return out;
}

TruthTable xor_tables(const TruthTable &a, const TruthTable &b) {
    return a ^ b;
}

Classification classify(const TruthTable &t) {
    auto w = t.words();
    std::uint64_t len = t.size();
    while (len > 1) {
        std::uint64_t half = len / 2;
        bool same = true;
        bool flipped = true;
        if (half >= 64) {
            std::size_t hw = half / 64;
            for (std::size_t k = 0; k < hw && (same || flipped); k++) {
                same = same && w[hw + k] == w[k];
                flipped = flipped && w[hw + k] == ~w[k];
            }
        } else {
            std::uint64_t m = low_mask(static_cast<int>(half));
            std::uint64_t lo = w[0] & m;
            std::uint64_t hi = (w[0] >> half) & m;
            same = hi == lo;
            flipped = hi == (~lo & m);
        }
        if (!same && !flipped) {
            return Classification::Neither;
        }
        len = half;
    }
    return t[0] ? Classification::Negative : Classification::Positive;
}

TruthTable from_affine(const AffineForm &af) {
    int n = af.n;
    check_qubit_count(n, kHardMaxQubits);
    if (af.mask > low_mask(n)) {
        fail(ErrorKind::InvalidArgument, "mask has bits above n");
    }
    TruthTable out(n);
    std::uint64_t low_bits = af.mask & 63;
    std::uint64_t pattern = 0;
    for (int j = 0; j < 6; j++) {
        if ((low_bits >> j) & 1) {
            pattern ^= kIndexBitPattern[j];
        }
    }
    std::uint64_t high_mask = af.mask >> 6;
    auto words = out.words();
    std::uint64_t keep = used_mask(n);
    for (std::size_t k = 0; k < words.size(); k++) {
        bool flip = parity(high_mask & k) != af.constant;
        words[k] = (flip ? ~pattern : pattern) & keep;
    }
    return out;
}

AffineForm to_affine(const TruthTable &t) {
    int n = t.num_qubits();
    AffineForm af{n, 0, t[0]};
    for (int j = 0; j < n; j++) {
        if (t[std::uint64_t{1} << j] != af.constant) {
            af.mask |= std::uint64_t{1} << j;
        }
    }
    if (from_affine(af) != t) {
        fail(ErrorKind::NotInFamily, "truth table is neither symmetric nor anti-symmetric");
    }
    return af;
}

std::uint64_t positive_index(const AffineForm &af) {
    return bit_reverse(af.mask, af.n);
}

AffineForm positive_at(int n, std::uint64_t index) {
    if (index > low_mask(n)) {
        fail(ErrorKind::InvalidArgument, "positive function index out of range");
    }
    return AffineForm{n, bit_reverse(index, n), false};
}

}  // namespace qsym
