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

#include <sstream>

#include <nlohmann/json.hpp>
#include "qsym/error.h"

namespace qsym {

BasisKet FlipNetwork::apply(const BasisKet &input) const {
    if (input.m != n + 1) {
        fail(ErrorKind::SizeMismatch, "network acts on " + std::to_string(n + 1) + " lines, ket has " +
                                          std::to_string(input.m));
    }
    BasisKet out = input;
    for (int q : flips) {
        // Data qubit q sits above the ancilla, which is bit 0.
        out.bits ^= std::uint64_t{1} << (n - q + 1);
    }
    if (phase) {
        out.sign = -out.sign;
    }
    return out;
}

std::string FlipNetwork::str() const {
    std::string s;
    for (int q : flips) {
        s += "X q" + std::to_string(q) + "\n";
    }
    if (phase) {
        s += "Z-phase\n";
    }
    return s;
}

FlipNetwork synthesize(const AffineForm &af) {
    FlipNetwork net{af.n, {}, af.constant};
    for (int q = 1; q <= af.n; q++) {
        if ((af.mask >> (af.n - q)) & 1) {
            net.flips.push_back(q);
        }
    }
    return net;
}

FunctionId FunctionId::of(const AffineForm &af) {
    return FunctionId{af.n, positive_index(af)};
}

FunctionId FunctionId::parse(int n, const std::string &text) {
    std::uint64_t ordinal;
    if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'z') {
        ordinal = static_cast<std::uint64_t>(text[0] - 'a');
    } else if (text.size() > 1 && text[0] == '#') {
        try {
            ordinal = std::stoull(text.substr(1));
        } catch (const std::exception &) {
            fail(ErrorKind::InvalidArgument, "bad function id '" + text + "'");
        }
    } else {
        fail(ErrorKind::InvalidArgument, "bad function id '" + text + "'");
    }
    if (ordinal >= (std::uint64_t{1} << n)) {
        fail(ErrorKind::InvalidArgument, "function id '" + text + "' out of range for n=" + std::to_string(n));
    }
    return FunctionId{n, ordinal};
}

AffineForm FunctionId::form() const {
    return positive_at(n, ordinal);
}

std::string FunctionId::str() const {
    if (ordinal < 26) {
        return std::string(1, static_cast<char>('a' + ordinal));
    }
    return "#" + std::to_string(ordinal);
}

FunctionSolution solve_function(const BitString &x, const BitString &y) {
    BitString mask = x ^ y;
    check_qubit_count(mask.width);
    AffineForm af{mask.width, mask.value, false};
    return FunctionSolution{af, from_affine(af), FunctionId::of(af)};
}

BitString solve_output(const BitString &x, const TruthTable &tt) {
    if (x.width != tt.num_qubits()) {
        fail(ErrorKind::SizeMismatch, "input width " + std::to_string(x.width) + " vs function over " +
                                          std::to_string(tt.num_qubits()) + " inputs");
    }
    Classification c = classify(tt);
    if (c == Classification::Neither) {
        fail(ErrorKind::NotInFamily, "function is neither symmetric nor anti-symmetric");
    }
    if (c == Classification::Negative) {
        fail(ErrorKind::InvalidArgument, "negative function: the output carries a sign, use the simulator");
    }
    return BitString{x.width, x.value ^ to_affine(tt).mask};
}

Table5 table5(int n) {
    check_qubit_count(n, kMaxTable5Qubits);
    auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    Table5 t{n, decltype(Table5::ids)(dim, dim)};
    for (Eigen::Index y = 0; y < dim; y++) {
        for (Eigen::Index x = 0; x < dim; x++) {
            AffineForm af{n, static_cast<std::uint64_t>(x ^ y), false};
            t.ids(x, y) = static_cast<std::uint32_t>(FunctionId::of(af).ordinal);
        }
    }
    return t;
}

std::string ket_label(int n, std::uint64_t bits) {
    return BitString{n, bits}.str() + "1";
}

std::string render_table5(const Table5 &t, TableFormat format) {
    auto dim = t.ids.rows();
    if (format == TableFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index y = 0; y < dim; y++) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index x = 0; x < dim; x++) {
                row.push_back(t.at(x, y).str());
            }
            rows.push_back(row);
        }
        nlohmann::json labels = nlohmann::json::array();
        for (Eigen::Index k = 0; k < dim; k++) {
            labels.push_back(ket_label(t.n, k));
        }
        return nlohmann::json{{"n", t.n}, {"inputs", labels}, {"outputs", labels}, {"ids", rows}}.dump() + "\n";
    }
    std::ostringstream out;
    std::string sep = format == TableFormat::Csv ? "," : " ";
    std::size_t width = format == TableFormat::Csv ? 0 : static_cast<std::size_t>(t.n + 1);
    auto pad = [&](std::string s) {
        if (s.size() < width) {
            s.append(width - s.size(), ' ');
        }
        return s;
    };
    out << pad(format == TableFormat::Csv ? "out\\in" : "");
    for (Eigen::Index x = 0; x < dim; x++) {
        out << sep << pad(ket_label(t.n, x));
    }
    out << "\n";
    for (Eigen::Index y = 0; y < dim; y++) {
        out << pad(ket_label(t.n, y));
        for (Eigen::Index x = 0; x < dim; x++) {
            out << sep << pad(t.at(x, y).str());
        }
        out << "\n";
    }
    std::string s = out.str();
    if (format == TableFormat::Text) {
        // drop trailing padding on each line
        std::string trimmed;
        std::istringstream in(s);
        for (std::string line; std::getline(in, line);) {
            line.erase(line.find_last_not_of(' ') + 1);
            trimmed += line + "\n";
        }
        return trimmed;
    }
    return s;
}

Table5Report check_table5_structure(const Table5 &t) {
    Table5Report report;
    auto dim = t.ids.rows();
    const auto &ids = t.ids;
    for (Eigen::Index x = 0; x < dim && report.xor_coset; x++) {
        for (Eigen::Index y = 0; y < dim; y++) {
            if (ids(x, y) != ids(x ^ y, 0)) {
                report.xor_coset = false;
                report.violations.push_back("entry (" + std::to_string(x) + "," + std::to_string(y) +
                                            ") does not depend on x^y alone");
                break;
            }
        }
    }
    if (ids != ids.transpose()) {
        report.symmetric = false;
        report.violations.push_back("table is not symmetric");
    }
    auto is_permutation = [&](const auto &line) {
        std::vector<bool> seen(static_cast<std::size_t>(dim), false);
        for (Eigen::Index k = 0; k < line.size(); k++) {
            auto v = static_cast<Eigen::Index>(line(k));
            if (v >= dim || seen[static_cast<std::size_t>(v)]) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
        return true;
    };
    for (Eigen::Index k = 0; k < dim && report.latin; k++) {
        if (!is_permutation(ids.row(k)) || !is_permutation(ids.col(k))) {
            report.latin = false;
            report.violations.push_back("row or column " + std::to_string(k) + " repeats an id");
        }
    }
    if ((ids.diagonal().array() != 0u).any()) {
        report.identity_diagonal = false;
        report.violations.push_back("diagonal holds a function other than a");
    }
    return report;
}

}  // namespace qsym
