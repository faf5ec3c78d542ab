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

#include "qsym/synth.h"

#include "gtest/gtest.h"
#include "qsym/error.h"

using namespace qsym;

TEST(synth, network_examples) {
    FlipNetwork p1 = synthesize({2, 0b10, false});
    EXPECT_EQ(p1.flips, std::vector<int>{1});
    EXPECT_FALSE(p1.phase);
    EXPECT_EQ(p1.apply({3, 0b001, 1}), (BasisKet{3, 0b101, 1}));

    FlipNetwork p12 = synthesize({2, 0b11, false});
    EXPECT_EQ(p12.flips, (std::vector<int>{1, 2}));
    EXPECT_EQ(p12.apply({3, 0b001, 1}), (BasisKet{3, 0b111, 1}));

    FlipNetwork one = synthesize({2, 0, true});
    EXPECT_TRUE(one.flips.empty());
    EXPECT_TRUE(one.phase);
    EXPECT_EQ(one.apply({3, 0b001, 1}), (BasisKet{3, 0b001, -1}));
    EXPECT_EQ(synthesize({2, 0b11, true}).apply({3, 0b001, 1}), (BasisKet{3, 0b111, -1}));
}

TEST(synth, network_text) {
    EXPECT_EQ(synthesize({4, 0b0110, false}).str(), "X q2\nX q3\n");
    EXPECT_EQ(synthesize({2, 0b10, true}).str(), "X q1\nZ-phase\n");
    EXPECT_EQ(synthesize({2, 0, false}).str(), "");
}

TEST(synth, network_is_involution) {
    for (int n = 1; n <= 5; n++) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask++) {
            for (bool c : {false, true}) {
                FlipNetwork net = synthesize({n, mask, c});
                for (std::uint64_t b = 0; b < (std::uint64_t{2} << n); b++) {
                    BasisKet in{n + 1, b, 1};
                    ASSERT_EQ(net.apply(net.apply(in)), in);
                }
            }
        }
    }
}

TEST(synth, equivalence_with_simulation) {
    for (int n = 1; n <= 6; n++) {
        for (const auto &t : construct_family(n)) {
            FlipNetwork net = synthesize(to_affine(t));
            for (std::uint64_t x = 0; x < t.size(); x++) {
                for (int sign : {1, -1}) {
                    BasisKet predicted = net.apply({n + 1, (x << 1) | 1, sign});
                    ASSERT_EQ(read_basis(sandwich(t, {n, x, sign})), predicted);
                }
            }
        }
    }
}

TEST(synth, function_ids) {
    EXPECT_EQ(FunctionId::of({4, 0b0110, false}).str(), "g");
    EXPECT_EQ(FunctionId::of({4, 0b0010, false}).str(), "e");
    EXPECT_EQ(FunctionId::of({4, 0b1111, false}).str(), "p");
    EXPECT_EQ((FunctionId{5, 26}).str(), "#26");
    EXPECT_EQ(FunctionId::parse(4, "g").form(), (AffineForm{4, 0b0110, false}));
    EXPECT_EQ(FunctionId::parse(5, "#31").ordinal, 31u);
    EXPECT_THROW(FunctionId::parse(4, "q"), Error);
    EXPECT_THROW(FunctionId::parse(4, "#x"), Error);
    auto family = construct_family(5);
    for (std::uint64_t k = 0; k < 32; k++) {
        EXPECT_EQ(from_affine(FunctionId{5, k}.form()), family[k]);
    }
}

TEST(synth, solve_function_examples) {
    FunctionSolution a = solve_function(BitString::parse("1000"), BitString::parse("1110"));
    EXPECT_EQ(a.form, (AffineForm{4, 0b0110, false}));
    EXPECT_EQ(to_hex(a.table), "3C3C");
    EXPECT_EQ(a.id.str(), "g");

    FunctionSolution same = solve_function(BitString::parse("1011"), BitString::parse("1011"));
    EXPECT_EQ(same.table, TruthTable(4));
    EXPECT_EQ(same.id.str(), "a");

    FunctionSolution all = solve_function(BitString::parse("0000"), BitString::parse("1111"));
    EXPECT_EQ(to_hex(all.table), "6996");
    EXPECT_EQ(all.id.str(), "p");
    EXPECT_THROW(solve_function(BitString::parse("000"), BitString::parse("1111")), Error);
}

TEST(synth, solve_output_examples) {
    EXPECT_EQ(solve_output(BitString::parse("0000"), TruthTable::from_hex("3333")), BitString::parse("0010"));
    EXPECT_EQ(solve_output(BitString::parse("0110"), TruthTable(4)), BitString::parse("0110"));
    EXPECT_EQ(solve_output(BitString::parse("1000"), TruthTable::from_hex("3C3C")), BitString::parse("1110"));
    EXPECT_THROW(solve_output(BitString::parse("00"), TruthTable::from_bin("0001")), Error);
    EXPECT_THROW(solve_output(BitString::parse("00"), TruthTable::from_bin("1111")), Error);
    EXPECT_THROW(solve_output(BitString::parse("000"), TruthTable::from_bin("0011")), Error);
}

TEST(synth, solve_round_trip) {
    for (int n = 1; n <= 8; n++) {
        std::uint64_t size = std::uint64_t{1} << n;
        std::uint64_t step = n > 5 ? 7 : 1;
        for (std::uint64_t x = 0; x < size; x += step) {
            for (std::uint64_t y = 0; y < size; y++) {
                FunctionSolution s = solve_function({n, x}, {n, y});
                ASSERT_EQ(solve_output({n, x}, s.table), (BitString{n, y}));
                if (n <= 4) {
                    ASSERT_EQ(read_basis(sandwich(s.table, {n, x, 1})), (BasisKet{n + 1, (y << 1) | 1, 1}));
                }
            }
        }
    }
}

TEST(synth, table5_examples) {
    Table5 t = table5(4);
    EXPECT_EQ(t.at(0b0000, 0b0000).str(), "a");
    EXPECT_EQ(t.at(0b1000, 0b0000).str(), "b");
    EXPECT_EQ(t.at(0b0000, 0b0110).str(), "g");
    EXPECT_EQ(t.at(0b0110, 0b0000).str(), "g");
    EXPECT_EQ(ket_label(4, 0b1000), "10001");
    EXPECT_THROW(table5(9), Error);
}

TEST(synth, table5_structure) {
    for (int n = 1; n <= 6; n++) {
        Table5Report r = check_table5_structure(table5(n));
        EXPECT_TRUE(r.ok()) << n;
        EXPECT_TRUE(r.xor_coset && r.symmetric && r.latin && r.identity_diagonal);
    }
}

TEST(synth, table5_structure_detects_damage) {
    Table5 t = table5(3);
    t.ids(1, 2) = t.ids(1, 3);
    Table5Report r = check_table5_structure(t);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.xor_coset);
    EXPECT_FALSE(r.symmetric);
    EXPECT_FALSE(r.latin);
    EXPECT_TRUE(r.identity_diagonal);

    Table5 d = table5(2);
    d.ids(1, 1) = 1;
    EXPECT_FALSE(check_table5_structure(d).identity_diagonal);
}

TEST(synth, table5_rendering) {
    std::string text = render_table5(table5(1), TableFormat::Text);
    EXPECT_EQ(text, "   01 11\n01 a  b\n11 b  a\n");
    std::string csv = render_table5(table5(1), TableFormat::Csv);
    EXPECT_EQ(csv, "out\\in,01,11\n01,a,b\n11,b,a\n");
    std::string json = render_table5(table5(1), TableFormat::Json);
    EXPECT_EQ(json, "{\"ids\":[[\"a\",\"b\"],[\"b\",\"a\"]],\"inputs\":[\"01\",\"11\"],\"n\":1,\"outputs\":[\"01\",\"11\"]}\n");
}
