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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsym/error.h"
#include "qsym/factor.h"
#include "qsym/identify.h"
#include "qsym/json_io.h"
#include "qsym/selftest.h"
#include "qsym/state.h"
#include "qsym/synth.h"
#include "qsym/truth_table.h"

namespace qsym::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotBasis:
        case ErrorKind::NotFactorable:
            return kNotBasis;
        case ErrorKind::PromiseViolated:
            return kPromiseViolated;
        case ErrorKind::SizeCap:
        case ErrorKind::Overflow:
            return kSizeCap;
        default:
            return kParseError;
    }
}

/// A function given as hex digits, a bin pattern, or an id letter.
struct FunctionSelector {
    std::string hex;
    std::string bin;
    std::string id;

    void add_to(CLI::App *app) {
        auto *h = app->add_option("--f", hex, "function as hex digits, f(0) most significant");
        auto *b = app->add_option("--bin", bin, "function as a bin pattern, f(0) first");
        auto *i = app->add_option("--id", id, "positive function id (a, b, ... or #k); needs --n");
        h->excludes(b)->excludes(i);
        b->excludes(i);
    }

    TruthTable resolve(int n, int max_qubits) const {
        std::optional<TruthTable> t;
        if (!hex.empty()) {
            t = TruthTable::from_hex(hex, n);
        } else if (!bin.empty()) {
            t = TruthTable::from_bin(bin);
        } else if (!id.empty()) {
            if (n == 0) {
                fail(ErrorKind::InvalidArgument, "--id needs --n");
            }
            check_qubit_count(n, max_qubits);
            return from_affine(FunctionId::parse(n, id).form());
        } else {
            fail(ErrorKind::InvalidArgument, "one of --f, --bin or --id is required");
        }
        if (n != 0 && t->num_qubits() != n) {
            fail(ErrorKind::SizeMismatch, "pattern covers " + std::to_string(t->num_qubits()) + " inputs, --n is " +
                                              std::to_string(n));
        }
        check_qubit_count(t->num_qubits(), max_qubits);
        return *t;
    }
};

std::string affine_expression(const AffineForm &af) {
    std::string s;
    for (int q = 1; q <= af.n; q++) {
        if ((af.mask >> (af.n - q)) & 1) {
            s += (s.empty() ? "p" : " ^ p") + std::to_string(q);
        }
    }
    if (s.empty()) {
        return af.constant ? "1" : "0";
    }
    return af.constant ? "1 ^ " + s : s;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

/// Prints rows with every column padded to its widest cell.
void print_columns(std::ostream &out, const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); c++) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    for (const auto &row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); c++) {
            line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]) + "  ";
        }
        out << line << "\n";
    }
}

void print_csv(std::ostream &out, const std::vector<std::vector<std::string>> &rows) {
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << row[c];
        }
        out << "\n";
    }
}

BitString parse_bits(const std::string &text, int expected_width) {
    BitString b = BitString::parse(text);
    if (expected_width != 0 && b.width != expected_width) {
        fail(ErrorKind::SizeMismatch, "'" + text + "' has " + std::to_string(b.width) + " bits, expected " +
                                          std::to_string(expected_width));
    }
    return b;
}

json ket_json(const BasisKet &k) {
    return {{"bits", BitString{k.m, k.bits}.str()}, {"sign", k.sign}, {"ket", k.str()}};
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symmetric and anti-symmetric quantum function toolkit", "qsym"};
    app.require_subcommand(1);
    int max_qubits = kDefaultMaxQubits;
    app.add_option("--max-qubits", max_qubits, "size cap on n (default 24)")->envname("QSYM_MAX_QUBITS");

    int n = 0;
    std::string format_name = "text";
    FunctionSelector selector;
    std::string x_text;
    std::string y_text;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App *sub, std::vector<std::string> allowed) {
        sub->add_option("--format", format_name, "output format")->check(CLI::IsMember(allowed));
    };

    auto *family = app.add_subcommand("family", "list the 2^(n+1) symmetric/anti-symmetric functions");
    std::string order = "canonical";
    family->add_option("--n", n, "number of inputs")->required();
    family->add_option("--order", order, "canonical or generation")->check(CLI::IsMember({"canonical", "generation"}));
    add_format(family, {"text", "csv", "json"});

    auto *classify_cmd = app.add_subcommand("classify", "Positive, Negative or Neither");
    classify_cmd->add_option("--n", n, "number of inputs (inferred from the pattern when omitted)");
    selector.add_to(classify_cmd);
    add_format(classify_cmd, {"text", "json"});

    auto *capacity_cmd = app.add_subcommand("capacity", "sum_i C(n,i) 2^(n-i), checked against 3^n");
    capacity_cmd->add_option("--n", n, "number of qubits")->required();
    add_format(capacity_cmd, {"text", "json"});

    auto *table1 = app.add_subcommand("table1", "sandwich outputs for every family member");
    table1->add_option("--n", n, "number of inputs (default 2)");
    table1->add_option("--x", x_text, "data input bits (default all zero)");

    auto *simulate = app.add_subcommand("simulate", "run H, U_f, H on |x,1>");
    int sign = 1;
    simulate->add_option("--n", n, "number of inputs");
    selector.add_to(simulate);
    simulate->add_option("--x", x_text, "data input bits, qubit 1 first")->required();
    simulate->add_option("--sign", sign, "input sign, +1 or -1")->check(CLI::IsMember({1, -1}));
    add_format(simulate, {"text", "json"});

    auto *factor_cmd = app.add_subcommand("factor", "factor a Hadamard-product state");
    std::string state_text;
    std::string state_file;
    factor_cmd->add_option("--state", state_text, "state JSON {\"m\",\"s\",\"amps\"}");
    factor_cmd->add_option("--state-file", state_file, "file holding the state JSON");

    auto *identify_cmd = app.add_subcommand("identify", "identify a hidden family function");
    std::string hidden;
    std::string mode = "amplitude";
    identify_cmd->add_option("--n", n, "number of inputs")->required();
    identify_cmd->add_option("--hidden", hidden, "hidden function (hex, or bin for n=1)")->required();
    identify_cmd->add_option("--mode", mode, "identification protocol")
        ->check(CLI::IsMember({"amplitude", "measured", "classical-naive", "classical-affine"}));
    identify_cmd->add_option("--seed", seed, "measurement seed");

    auto *synth = app.add_subcommand("synth", "flip-network equivalents and the two design problems");
    synth->require_subcommand(1);
    auto *synth_function = synth->add_subcommand("function", "positive function taking |x,1> to |y,1>");
    synth_function->add_option("--x", x_text, "input bits")->required();
    synth_function->add_option("--y", y_text, "output bits")->required();
    add_format(synth_function, {"text", "json"});
    auto *synth_output = synth->add_subcommand("output", "output of a positive function on |x,1>");
    synth_output->add_option("--x", x_text, "input bits")->required();
    synth_output->add_option("--n", n, "number of inputs");
    selector.add_to(synth_output);
    add_format(synth_output, {"text", "json"});
    auto *synth_network = synth->add_subcommand("network", "flip network of any family member");
    synth_network->add_option("--n", n, "number of inputs");
    selector.add_to(synth_network);

    auto *table5_cmd = app.add_subcommand("table5", "function ids by input and output basis state");
    table5_cmd->add_option("--n", n, "number of inputs (default 4)");
    add_format(table5_cmd, {"text", "csv", "json"});

    auto *selftest = app.add_subcommand("selftest", "exercise the pipeline on every family function and input");
    std::string fault_text = "none";
    selftest->add_option("--n", n, "number of inputs")->required();
    selftest->add_option("--fault", fault_text, "none, drop-stage:K, skip-swap:ROW or sign-flip:INDEX");
    selftest->add_option("--seed", seed, "sampling seed for large n");

    auto *bench = app.add_subcommand("bench", "query counts and timings for the identification protocols");
    bench->add_option("--n", n, "number of inputs")->required();
    add_format(bench, {"text", "json"});

    std::vector<char *> argv;
    std::vector<std::string> storage = args;
    for (auto &a : storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (family->parsed()) {
            auto members = order == "generation" ? family_generation_order(n, max_qubits)
                                                 : construct_family(n, max_qubits);
            if (format_name == "json") {
                json rows = json::array();
                for (const auto &t : members) {
                    AffineForm af = to_affine(t);
                    json row = to_json(t);
                    row["class"] = classification_name(classify(t));
                    row["bin"] = to_bin(t);
                    row["dec"] = to_dec(t);
                    row["form"] = affine_expression(af);
                    rows.push_back(row);
                }
                out << json{{"n", n}, {"order", order}, {"functions", rows}}.dump() << "\n";
                return kOk;
            }
            std::vector<std::vector<std::string>> rows{{"idx", "id", "class", "bin", "hex", "dec", "form"}};
            for (std::size_t k = 0; k < members.size(); k++) {
                const auto &t = members[k];
                AffineForm af = to_affine(t);
                rows.push_back({std::to_string(k), af.constant ? "-" : FunctionId::of(af).str(),
                                classification_name(classify(t)), to_bin(t), n >= 2 ? to_hex(t) : "-", to_dec(t),
                                affine_expression(af)});
            }
            if (format_name == "csv") {
                print_csv(out, rows);
            } else {
                print_columns(out, rows);
            }
            return kOk;
        }

        if (classify_cmd->parsed()) {
            TruthTable t = selector.resolve(n, max_qubits);
            Classification c = classify(t);
            if (format_name == "json") {
                json j = to_json(t);
                j["class"] = classification_name(c);
                if (c != Classification::Neither) {
                    AffineForm af = to_affine(t);
                    j["mask"] = BitString{af.n, af.mask}.str();
                    j["constant"] = af.constant ? 1 : 0;
                }
                out << j.dump() << "\n";
            } else {
                out << classification_name(c) << "\n";
            }
            return kOk;
        }

        if (capacity_cmd->parsed()) {
            BigUint total = capacity(n);
            BigUint power = boost::multiprecision::pow(BigUint(3), static_cast<unsigned>(n));
            if (format_name == "json") {
                out << json{{"n", n}, {"capacity", total.str()}, {"three_pow_n", power.str()},
                            {"identity_holds", total == power}}
                           .dump()
                    << "\n";
            } else {
                out << total.str() << " = 3^" << n << (total == power ? "" : "  (MISMATCH)") << "\n";
            }
            return total == power ? kOk : kCheckFailed;
        }

        if (table1->parsed()) {
            if (n == 0) {
                n = 2;
            }
            check_qubit_count(n, std::min(max_qubits, 6));
            BitString x = x_text.empty() ? BitString{n, 0} : parse_bits(x_text, n);
            auto members = construct_family(n, max_qubits);
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{"x"};
            for (const auto &t : members) {
                header.push_back("f_" + (n >= 2 ? to_hex(t) : to_bin(t)));
            }
            rows.push_back(header);
            for (std::uint64_t in = 0; in < (std::uint64_t{1} << n); in++) {
                std::vector<std::string> row{BitString{n, in}.str()};
                for (const auto &t : members) {
                    row.push_back(t[in] ? "1" : "0");
                }
                rows.push_back(row);
            }
            std::vector<StateVector> outputs;
            for (const auto &t : members) {
                outputs.push_back(sandwich(t, BasisKet{n, x.value, 1}));
            }
            for (std::uint64_t k = 0; k < (std::uint64_t{2} << n); k++) {
                std::vector<std::string> row{"psi_" + std::to_string(k)};
                for (const auto &sv : outputs) {
                    row.push_back(std::to_string(sv.amps[static_cast<Eigen::Index>(k)]));
                }
                rows.push_back(row);
            }
            print_columns(out, rows);
            return kOk;
        }

        if (simulate->parsed()) {
            BitString x = parse_bits(x_text, n);
            TruthTable t = selector.resolve(x.width, max_qubits);
            StateVector sv = sandwich(t, BasisKet{x.width, x.value, sign});
            bool basis = is_basis(sv);
            if (format_name == "json") {
                json j{{"state", to_json(sv)}, {"basis", basis ? ket_json(read_basis(sv)) : json(nullptr)}};
                out << j.dump() << "\n";
            } else {
                out << (basis ? read_basis(sv).str() : to_text(sv)) << "\n";
            }
            if (!basis) {
                err << "NotBasis: output is not a basis state\n";
                return kNotBasis;
            }
            return kOk;
        }

        if (factor_cmd->parsed()) {
            std::string text = state_text;
            if (!state_file.empty()) {
                std::ifstream in(state_file);
                if (!in) {
                    fail(ErrorKind::InvalidArgument, "cannot read " + state_file);
                }
                std::stringstream buffer;
                buffer << in.rdbuf();
                text = buffer.str();
            }
            if (text.empty()) {
                fail(ErrorKind::InvalidArgument, "one of --state or --state-file is required");
            }
            json j = json::parse(text, nullptr, false);
            if (j.is_discarded()) {
                fail(ErrorKind::InvalidArgument, "state is not valid JSON");
            }
            FactorResult r = factor_state(state_from_json(j));
            out << json{{"y", BitString{r.n, r.y}.str()}, {"sign", r.sign > 0 ? "+1" : "-1"}}.dump() << "\n";
            return kOk;
        }

        if (identify_cmd->parsed()) {
            check_qubit_count(n, max_qubits);
            TruthTable t = n == 1 ? TruthTable::from_bin(hidden) : TruthTable::from_hex(hidden, n);
            json j;
            if (mode == "amplitude" || mode == "measured") {
                HiddenOracle oracle(t);
                IdResult r = mode == "amplitude" ? identify_amplitude(oracle) : identify_measured(oracle, seed);
                j = {{"mask", BitString{n, r.mask}.str()}, {"queries", r.query_count}};
                j["constant"] = r.constant ? json(*r.constant ? 1 : 0) : json("unknown");
            } else if (mode == "classical-naive") {
                BitOracle oracle(t);
                auto [table, queries] = classical_identify_naive(oracle);
                j = {{"queries", queries}, {"table", to_json(table)}};
                if (is_family_member(table)) {
                    AffineForm af = to_affine(table);
                    j["mask"] = BitString{n, af.mask}.str();
                    j["constant"] = af.constant ? 1 : 0;
                } else {
                    j["mask"] = nullptr;
                    j["constant"] = nullptr;
                }
            } else {
                BitOracle oracle(t);
                auto [af, queries] = classical_identify_affine(oracle);
                j = {{"mask", BitString{n, af.mask}.str()}, {"constant", af.constant ? 1 : 0}, {"queries", queries}};
            }
            out << j.dump() << "\n";
            return kOk;
        }

        if (synth_function->parsed()) {
            BitString x = parse_bits(x_text, 0);
            BitString y = parse_bits(y_text, x.width);
            FunctionSolution s = solve_function(x, y);
            FlipNetwork net = synthesize(s.form);
            std::string pattern = s.form.n >= 2 ? to_hex(s.table) : to_bin(s.table);
            if (format_name == "json") {
                out << json{{"id", s.id.str()},
                            {"mask", BitString{s.form.n, s.form.mask}.str()},
                            {"table", to_json(s.table)},
                            {"form", affine_expression(s.form)},
                            {"network", net.str()}}
                           .dump()
                    << "\n";
            } else {
                out << "# id " << s.id.str() << "\n# table " << pattern << "\n# form "
                    << affine_expression(s.form) << "\n"
                    << net.str();
            }
            return kOk;
        }

        if (synth_output->parsed()) {
            BitString x = parse_bits(x_text, n);
            TruthTable t = selector.resolve(x.width, max_qubits);
            BitString y = solve_output(x, t);
            BasisKet ket{y.width + 1, (y.value << 1) | 1, 1};
            if (format_name == "json") {
                out << json{{"y", y.str()}, {"ket", ket.str()}}.dump() << "\n";
            } else {
                out << ket.str() << "\n";
            }
            return kOk;
        }

        if (synth_network->parsed()) {
            TruthTable t = selector.resolve(n, max_qubits);
            out << synthesize(to_affine(t)).str();
            return kOk;
        }

        if (table5_cmd->parsed()) {
            if (n == 0) {
                n = 4;
            }
            check_qubit_count(n, std::min(max_qubits, kMaxTable5Qubits));
            TableFormat f = format_name == "csv" ? TableFormat::Csv
                            : format_name == "json" ? TableFormat::Json
                                                    : TableFormat::Text;
            out << render_table5(table5(n), f);
            return kOk;
        }

        if (selftest->parsed()) {
            Fault fault = Fault::parse(fault_text);
            SelftestReport r = run_selftest(n, fault, seed, max_qubits);
            out << "selftest n=" << r.n << " fault=" << r.fault.str() << " cases=" << r.cases
                << " passed=" << r.passed << " failed=" << (r.cases - r.passed)
                << (r.sampled ? " (sampled)" : " (exhaustive)") << "\n";
            for (const auto &f : r.failures) {
                out << "  FAIL " << f << "\n";
            }
            bool injected = fault.kind != FaultKind::None;
            if (!injected) {
                out << (r.ok() ? "result: PASS" : "result: FAIL") << "\n";
                return r.ok() ? kOk : kCheckFailed;
            }
            out << (r.ok() ? "result: FAULT NOT DETECTED" : "result: FAULT DETECTED") << "\n";
            return r.ok() ? kCheckFailed : kOk;
        }

        if (bench->parsed()) {
            check_qubit_count(n, max_qubits);
            using Clock = std::chrono::steady_clock;
            std::uint64_t count = std::uint64_t{2} << n;
            struct Row {
                std::string method;
                std::uint64_t queries = 0;
                std::uint64_t correct = 0;
                double ms = 0;
            };
            std::vector<Row> rows{{"amplitude"}, {"classical-affine"}, {"classical-naive"}};
            for (std::uint64_t k = 0; k < count; k++) {
                TruthTable t = family_member(n, k, max_qubits);
                AffineForm truth = to_affine(t);
                auto t0 = Clock::now();
                HiddenOracle hidden(t);
                IdResult q = identify_amplitude(hidden);
                auto t1 = Clock::now();
                BitOracle affine_oracle(t);
                auto [af, affine_queries] = classical_identify_affine(affine_oracle);
                auto t2 = Clock::now();
                BitOracle naive_oracle(t);
                auto [table, naive_queries] = classical_identify_naive(naive_oracle);
                auto t3 = Clock::now();
                rows[0].queries += q.query_count;
                rows[0].correct += q.mask == truth.mask && q.constant == truth.constant;
                rows[0].ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
                rows[1].queries += affine_queries;
                rows[1].correct += af == truth;
                rows[1].ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
                rows[2].queries += naive_queries;
                rows[2].correct += table == t;
                rows[2].ms += std::chrono::duration<double, std::milli>(t3 - t2).count();
            }
            if (format_name == "json") {
                json j = json::array();
                for (const auto &r : rows) {
                    j.push_back({{"method", r.method},
                                 {"functions", count},
                                 {"queries_per_function", r.queries / count},
                                 {"correct", r.correct},
                                 {"total_ms", r.ms}});
                }
                out << json{{"n", n}, {"results", j}}.dump() << "\n";
            } else {
                std::vector<std::vector<std::string>> table{
                    {"method", "functions", "queries/function", "correct", "total_ms"}};
                for (const auto &r : rows) {
                    std::ostringstream ms;
                    ms.setf(std::ios::fixed);
                    ms.precision(3);
                    ms << r.ms;
                    table.push_back({r.method, std::to_string(count), std::to_string(r.queries / count),
                                     std::to_string(r.correct), ms.str()});
                }
                print_columns(out, table);
            }
            bool all_correct = rows[0].correct == count && rows[1].correct == count && rows[2].correct == count;
            return all_correct ? kOk : kCheckFailed;
        }
    } catch (const Error &e) {
        err << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const json::exception &e) {
        err << "InvalidArgument: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

}  // namespace qsym::cli
