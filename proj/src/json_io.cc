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

#include "qsym/json_io.h"

#include "qsym/error.h"

namespace qsym {

nlohmann::json to_json(const TruthTable &t) {
    if (t.num_qubits() == 1) {
        return {{"n", 1}, {"bin", to_bin(t)}};
    }
    return {{"n", t.num_qubits()}, {"hex", to_hex(t)}};
}

TruthTable truth_table_from_json(const nlohmann::json &j) {
    try {
        int n = j.at("n").get<int>();
        check_qubit_count(n, kHardMaxQubits);
        TruthTable t = j.contains("hex") ? TruthTable::from_hex(j.at("hex").get<std::string>(), n)
                                         : TruthTable::from_bin(j.at("bin").get<std::string>());
        if (t.num_qubits() != n) {
            fail(ErrorKind::SizeMismatch, "pattern length does not match n");
        }
        return t;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed truth table JSON: ") + e.what());
    }
}

nlohmann::json to_json(const StateVector &sv) {
    std::vector<std::int64_t> amps(sv.amps.data(), sv.amps.data() + sv.amps.size());
    return {{"m", sv.m}, {"s", sv.half_power}, {"amps", amps}};
}

StateVector state_from_json(const nlohmann::json &j) {
    try {
        int m = j.at("m").get<int>();
        auto values = j.at("amps").get<std::vector<std::int64_t>>();
        Amplitudes amps = Eigen::Map<const Amplitudes>(values.data(), static_cast<Eigen::Index>(values.size()));
        StateVector sv = make_state(std::move(amps), j.at("s").get<int>());
        if (sv.m != m) {
            fail(ErrorKind::SizeMismatch, "amplitude count does not match m");
        }
        return sv;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed state JSON: ") + e.what());
    }
}

}  // namespace qsym
