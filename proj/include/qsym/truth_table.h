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

#ifndef QSYM_TRUTH_TABLE_H
#define QSYM_TRUTH_TABLE_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsym {

/// Default limit on the number of data qubits a caller may request (16 Mi table bits).
inline constexpr int kDefaultMaxQubits = 24;
/// Absolute limit for any truth table, regardless of caller overrides.
inline constexpr int kHardMaxQubits = 32;

/// Throws SizeCap when n lies outside [1, min(max_qubits, kHardMaxQubits)].
void check_qubit_count(int n, int max_qubits = kDefaultMaxQubits);

using BigUint = boost::multiprecision::cpp_int;

/// f(x) = parity(mask & x) ^ constant. Bit (n - i) of mask selects variable p_i, so
/// p_1 is the most significant bit, matching the truth-table index order.
struct AffineForm {
    int n = 1;
    std::uint64_t mask = 0;
    bool constant = false;

    bool operator()(std::uint64_t x) const;
    bool operator==(const AffineForm &) const = default;
};

enum class Classification { Positive, Negative, Neither };
const char *classification_name(Classification c);

/// Packed Boolean function over n inputs. Entry x is f(x), where the index bit for
/// x_1 is the most significant one; entries are stored little-endian inside 64-bit
/// words (entry x lives at bit x % 64 of word x / 64). Unused high bits are zero.
class TruthTable {
   public:
    explicit TruthTable(int n);

    /// Parses a bin string, f(0) first ("0011" is p_1 for n = 2).
    static TruthTable from_bin(std::string_view bin);
    /// Parses hex digits, case-insensitive. When n is 0 it is inferred from the
    /// digit count (4 * digits must be a power of two).
    static TruthTable from_hex(std::string_view hex, int n = 0);
    /// Concatenation: `low` becomes the x_1 = 0 half, `high` the x_1 = 1 half.
    static TruthTable concat(const TruthTable &low, const TruthTable &high);

    int num_qubits() const {
        return n_;
    }
    std::uint64_t size() const {
        return std::uint64_t{1} << n_;
    }
    bool operator[](std::uint64_t x) const {
        return ((words_[x >> 6] >> (x & 63)) & 1) != 0;
    }
    void set(std::uint64_t x, bool value);

    std::span<const std::uint64_t> words() const {
        return words_;
    }
    std::span<std::uint64_t> words() {
        return words_;
    }

    std::uint64_t count_ones() const;

    TruthTable &operator^=(const TruthTable &other);

    bool operator==(const TruthTable &other) const = default;
    /// Orders tables by the numeric value of their bin string.
    std::strong_ordering operator<=>(const TruthTable &other) const;

   private:
    int n_;
    std::vector<std::uint64_t> words_;
};

TruthTable operator^(TruthTable a, const TruthTable &b);
TruthTable operator~(const TruthTable &t);

TruthTable complement(const TruthTable &t);
/// Index reversal: mirror(t)[x] = t[2^n - 1 - x].
TruthTable mirror(const TruthTable &t);
/// Pointwise XOR. Throws SizeMismatch when the input counts differ.
TruthTable xor_tables(const TruthTable &a, const TruthTable &b);

/// Recursive halving test: at every level the second half of the leading block
/// must equal the first half or its complement. O(2^n / 64) word operations.
Classification classify(const TruthTable &t);
inline bool is_family_member(const TruthTable &t) {
    return classify(t) != Classification::Neither;
}

/// Recovers (mask, constant) from f(0) and the unit inputs, then checks the whole
/// table. Throws NotInFamily when no affine form matches.
AffineForm to_affine(const TruthTable &t);
TruthTable from_affine(const AffineForm &af);

/// The 2^(n+1) symmetric and anti-symmetric functions in ascending numeric order:
/// the 2^n positives first, then the 2^n negatives.
std::vector<TruthTable> construct_family(int n, int max_qubits = kDefaultMaxQubits);

/// The same set, in the order produced by concatenating each member of the sorted
/// (n-1)-family with itself and then with its mirror image in that list.
std::vector<TruthTable> family_generation_order(int n, int max_qubits = kDefaultMaxQubits);

/// Member k of construct_family(n), built directly without materializing the rest.
TruthTable family_member(int n, std::uint64_t k, int max_qubits = kDefaultMaxQubits);

/// Ascending position of a positive function among the 2^n positives.
std::uint64_t positive_index(const AffineForm &af);
AffineForm positive_at(int n, std::uint64_t index);

enum class Style { Bin, Hex, Dec };

std::string to_bin(const TruthTable &t);
/// Uppercase, 2^n / 4 digits. Throws InvalidArgument for n = 1.
std::string to_hex(const TruthTable &t);
/// The bin string read as an unsigned integer.
std::string to_dec(const TruthTable &t);
std::string format(const TruthTable &t, Style style);

/// sum_{i=0}^{n} C(n, i) 2^(n-i): how many distinct vectors n qubits can hold when
/// each is prepared as (1 0), (0 1) or (1 1).
BigUint capacity(int n);

}  // namespace qsym

#endif
