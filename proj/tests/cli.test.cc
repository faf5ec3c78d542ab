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

#include "cli.h"

#include <sstream>

#include "gtest/gtest.h"
#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "qsym");
    std::ostringstream out, err;
    int code = qsym::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, family_table) {
    CliRun r = run({"family", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "idx  id  class     bin   hex  dec  form\n"
              "0    a   Positive  0000  0    0    0\n"
              "1    b   Positive  0011  3    3    p1\n"
              "2    c   Positive  0101  5    5    p2\n"
              "3    d   Positive  0110  6    6    p1 ^ p2\n"
              "4    -   Negative  1001  9    9    1 ^ p1 ^ p2\n"
              "5    -   Negative  1010  A    10   1 ^ p2\n"
              "6    -   Negative  1100  C    12   1 ^ p1\n"
              "7    -   Negative  1111  F    15   1\n");
    CliRun j = run({"family", "--n", "3", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    json doc = json::parse(j.out);
    EXPECT_EQ(doc["functions"].size(), 16u);
    EXPECT_EQ(doc["functions"][7]["hex"], "69");
    EXPECT_EQ(doc["functions"][2]["dec"], "51");
    CliRun csv = run({"family", "--n", "1", "--format", "csv"});
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "idx,id,class,bin,hex,dec,form");
}

TEST(cli, classify_and_capacity) {
    EXPECT_EQ(run({"classify", "--f", "69", "--n", "3"}).out, "Positive\n");
    EXPECT_EQ(run({"classify", "--bin", "0001"}).out, "Neither\n");
    EXPECT_EQ(run({"classify", "--f", "9"}).out, "Negative\n");
    EXPECT_EQ(run({"classify", "--id", "g", "--n", "4", "--format", "json"}).out,
              "{\"class\":\"Positive\",\"constant\":0,\"hex\":\"3C3C\",\"mask\":\"0110\",\"n\":4}\n");
    EXPECT_EQ(run({"capacity", "--n", "2"}).out, "9 = 3^2\n");
    EXPECT_EQ(run({"capacity", "--n", "20", "--format", "json"}).out,
              "{\"capacity\":\"3486784401\",\"identity_holds\":true,\"n\":20,\"three_pow_n\":\"3486784401\"}\n");
}

TEST(cli, simulate) {
    CliRun r = run({"simulate", "--f", "3", "--x", "00"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "+|1,0,1⟩\n");
    EXPECT_EQ(run({"simulate", "--f", "F", "--x", "00"}).out, "-|0,0,1⟩\n");
    CliRun and_fn = run({"simulate", "--f", "1", "--x", "00"});
    EXPECT_EQ(and_fn.code, qsym::cli::kNotBasis);
    EXPECT_EQ(and_fn.out, "(0 1 0 1 0 1 0 -1)/√2^2\n");
    CliRun j = run({"simulate", "--f", "3C3C", "--x", "1000", "--format", "json"});
    EXPECT_EQ(json::parse(j.out)["basis"]["bits"], "11101");
    EXPECT_EQ(run({"simulate", "--f", "3C3C", "--x", "100"}).code, qsym::cli::kParseError);
}

TEST(cli, factor) {
    CliRun r = run({"factor", "--state", R"({"m":3,"s":3,"amps":[1,-1,1,-1,1,-1,1,-1]})"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"sign\":\"+1\",\"y\":\"001\"}\n");
    CliRun bad = run({"factor", "--state", R"({"m":3,"s":3,"amps":[1,-1,1,1,1,-1,1,-1]})"});
    EXPECT_EQ(bad.code, qsym::cli::kNotBasis);
    EXPECT_NE(bad.err.find("NotFactorable"), std::string::npos);
    EXPECT_EQ(run({"factor", "--state", "{"}).code, qsym::cli::kParseError);
}

TEST(cli, identify_modes) {
    EXPECT_EQ(run({"identify", "--n", "2", "--hidden", "3"}).out,
              "{\"constant\":0,\"mask\":\"10\",\"queries\":1}\n");
    EXPECT_EQ(run({"identify", "--n", "2", "--hidden", "C", "--mode", "measured", "--seed", "5"}).out,
              "{\"constant\":\"unknown\",\"mask\":\"10\",\"queries\":1}\n");
    json naive = json::parse(run({"identify", "--n", "2", "--hidden", "6", "--mode", "classical-naive"}).out);
    EXPECT_EQ(naive["queries"], 4);
    EXPECT_EQ(naive["mask"], "11");
    EXPECT_EQ(run({"identify", "--n", "4", "--hidden", "3C3C", "--mode", "classical-affine"}).out,
              "{\"constant\":0,\"mask\":\"0110\",\"queries\":5}\n");
    EXPECT_EQ(run({"identify", "--n", "2", "--hidden", "1"}).code, qsym::cli::kPromiseViolated);
    EXPECT_EQ(run({"identify", "--n", "1", "--hidden", "10"}).out,
              "{\"constant\":1,\"mask\":\"1\",\"queries\":1}\n");
}

TEST(cli, synth) {
    EXPECT_EQ(run({"synth", "function", "--x", "1000", "--y", "1110"}).out,
              "# id g\n# table 3C3C\n# form p2 ^ p3\nX q2\nX q3\n");
    EXPECT_EQ(run({"synth", "output", "--x", "0000", "--f", "3333"}).out, "+|0,0,1,0,1⟩\n");
    EXPECT_EQ(run({"synth", "output", "--x", "0000", "--f", "3333", "--format", "json"}).out,
              "{\"ket\":\"+|0,0,1,0,1⟩\",\"y\":\"0010\"}\n");
    EXPECT_EQ(run({"synth", "network", "--f", "C"}).out, "X q1\nZ-phase\n");
    EXPECT_EQ(run({"synth", "output", "--x", "00", "--f", "1"}).code, qsym::cli::kParseError);
}

TEST(cli, table5_and_table1) {
    CliRun r = run({"table5"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(first.substr(0, 49), "00001 a     i     e     m     c     k     g     o");
    CliRun t1 = run({"table1"});
    EXPECT_NE(t1.out.find("psi_7  0    0    0    1    -1   0    0    0"), std::string::npos) << t1.out;
}

TEST(cli, selftest) {
    CliRun clean = run({"selftest", "--n", "4"});
    EXPECT_EQ(clean.code, 0);
    EXPECT_NE(clean.out.find("cases=512 passed=512"), std::string::npos);
    for (std::string fault : {"drop-stage:2", "skip-swap:3", "sign-flip:7"}) {
        CliRun r = run({"selftest", "--n", "4", "--fault", fault});
        EXPECT_EQ(r.code, 0) << fault;
        EXPECT_NE(r.out.find("FAULT DETECTED"), std::string::npos) << fault;
    }
}

TEST(cli, errors_and_caps) {
    EXPECT_EQ(run({}).code, qsym::cli::kParseError);
    EXPECT_EQ(run({"bogus"}).code, qsym::cli::kParseError);
    EXPECT_EQ(run({"family"}).code, qsym::cli::kParseError);
    EXPECT_EQ(run({"family", "--n", "30"}).code, qsym::cli::kSizeCap);
    EXPECT_EQ(run({"--max-qubits", "3", "family", "--n", "4"}).code, qsym::cli::kSizeCap);
    EXPECT_EQ(run({"table5", "--n", "9"}).code, qsym::cli::kSizeCap);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, bench) {
    CliRun r = run({"bench", "--n", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["results"][0]["queries_per_function"], 1);
    EXPECT_EQ(doc["results"][1]["queries_per_function"], 5);
    EXPECT_EQ(doc["results"][2]["queries_per_function"], 16);
    EXPECT_EQ(doc["results"][0]["correct"], 32);
}
