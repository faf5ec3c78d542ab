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

#include "qsym/selftest.h"

#include <random>

#include "qsym/error.h"
#include "qsym/state.h"
#include "qsym/synth.h"

namespace qsym {

Fault Fault::parse(const std::string &text) {
    if (text.empty() || text == "none") {
        return {};
    }
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::uint64_t where = 0;
    if (colon != std::string::npos) {
        try {
            std::size_t used = 0;
            where = std::stoull(text.substr(colon + 1), &used);
            if (used != text.size() - colon - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            fail(ErrorKind::InvalidArgument, "bad fault location in '" + text + "'");
        }
    }
    if (name == "drop-stage") {
        return {FaultKind::DropStage, where};
    }
    if (name == "skip-swap") {
        return {FaultKind::SkipSwap, where};
    }
    if (name == "sign-flip") {
        return {FaultKind::SignFlip, where};
    }
    fail(ErrorKind::InvalidArgument, "unknown fault '" + text + "'");
}

std::string Fault::str() const {
    switch (kind) {
        case FaultKind::None:
            return "none";
        case FaultKind::DropStage:
            return "drop-stage:" + std::to_string(where);
        case FaultKind::SkipSwap:
            return "skip-swap:" + std::to_string(where);
        case FaultKind::SignFlip:
            return "sign-flip:" + std::to_string(where);
    }
    return "?";
}

namespace {

void check_fault(int n, const Fault &fault) {
    std::uint64_t limit = 0;
    switch (fault.kind) {
        case FaultKind::None:
            return;
        case FaultKind::DropStage:
            limit = static_cast<std::uint64_t>(n + 1);
            break;
        case FaultKind::SkipSwap:
            limit = std::uint64_t{1} << n;
            break;
        case FaultKind::SignFlip:
            limit = std::uint64_t{1} << (n + 1);
            break;
    }
    if (fault.where >= limit) {
        fail(ErrorKind::InvalidArgument, "fault location " + fault.str() + " out of range for n=" + std::to_string(n));
    }
}

StateVector faulty_sandwich(const TruthTable &tt, std::uint64_t x, const Fault &fault) {
    int m = tt.num_qubits() + 1;
    StateVector sv = basis_state((x << 1) | 1, 1, m);
    for (int stage = 0; stage < m; stage++) {
        if (fault.kind == FaultKind::DropStage && static_cast<std::uint64_t>(stage) == fault.where) {
            continue;
        }
        hadamard_stage(sv, stage);
    }
    reduce_scale(sv);
    for (std::uint64_t row = 0; row < tt.size(); row++) {
        if (!tt[row] || (fault.kind == FaultKind::SkipSwap && row == fault.where)) {
            continue;
        }
        swap_pair(sv, row);
    }
    if (fault.kind == FaultKind::SignFlip) {
        auto k = static_cast<Eigen::Index>(fault.where);
        sv.amps[k] = -sv.amps[k];
    }
    return hadamard_all(std::move(sv));
}

}  // namespace

SelftestReport run_selftest(int n, const Fault &fault, std::uint64_t seed, int max_qubits) {
    check_qubit_count(n, max_qubits);
    check_fault(n, fault);
    SelftestReport report;
    report.n = n;
    report.fault = fault;
    std::uint64_t functions = std::uint64_t{2} << n;
    std::uint64_t inputs = std::uint64_t{1} << n;
    std::uint64_t total = functions * inputs;
    report.sampled = total > kExhaustiveSelftestCases;

    auto run_case = [&](std::uint64_t k, std::uint64_t x) {
        TruthTable tt = family_member(n, k, max_qubits);
        FlipNetwork net = synthesize(to_affine(tt));
        BasisKet expected = net.apply(BasisKet{n + 1, (x << 1) | 1, 1});
        StateVector out = faulty_sandwich(tt, x, fault);
        report.cases++;
        if (is_basis(out) && read_basis(out) == expected) {
            report.passed++;
        } else if (report.failures.size() < 8) {
            report.failures.push_back("f=" + format(tt, n >= 2 ? Style::Hex : Style::Bin) + " x=" +
                                      BitString{n, x}.str() + " expected " + expected.str() + " got " +
                                      (is_basis(out) ? read_basis(out).str() : to_text(out)));
        }
    };

    if (!report.sampled) {
        for (std::uint64_t k = 0; k < functions; k++) {
            for (std::uint64_t x = 0; x < inputs; x++) {
                run_case(k, x);
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t c = 0; c < kSampledSelftestCases; c++) {
            std::uint64_t k = rng() % functions;
            std::uint64_t x = rng() % inputs;
            run_case(k, x);
        }
    }
    return report;
}

}  // namespace qsym
