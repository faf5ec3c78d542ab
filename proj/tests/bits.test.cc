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

#include "gtest/gtest.h"
#include "qsym/error.h"

using namespace qsym;

TEST(bits, bit_string) {
    BitString b = BitString::parse("1000");
    EXPECT_EQ(b.width, 4);
    EXPECT_EQ(b.value, 8u);
    EXPECT_TRUE(b.qubit(1));
    EXPECT_FALSE(b.qubit(4));
    EXPECT_EQ(b.str(), "1000");
    EXPECT_EQ(BitString::parse("0010").str(), "0010");
    EXPECT_THROW(BitString::parse(""), Error);
    EXPECT_THROW(BitString::parse("102"), Error);
}

TEST(bits, helpers) {
    EXPECT_EQ(bit_reverse(0b0001, 4), 0b1000u);
    EXPECT_EQ(bit_reverse(0b0110, 4), 0b0110u);
    EXPECT_EQ(bit_reverse(1, 64), std::uint64_t{1} << 63);
    EXPECT_TRUE(parity(0b111));
    EXPECT_FALSE(parity(0b101));
}
