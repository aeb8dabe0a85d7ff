// Copyright 2026 The qgraph Authors
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

#include "qgraph/cli/runner.h"

#include <filesystem>
#include <functional>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qgraph/errors.h"
#include "qgraph/graph_io.h"
#include "qgraph/graph_state.h"
#include "qgraph/protocols.h"
#include "qgraph/readout.h"

namespace qgraph::cli {

namespace {

using nlohmann::ordered_json;

ordered_json counters_json(const GateCounters &c) {
    ordered_json j;
    j["one_qubit_gates"] = c.one_qubit_gates;
    j["two_qubit_gates"] = c.two_qubit_gates;
    j["measurements"] = c.measurements;
    j["ancillas_used"] = c.ancillas_used;
    return j;
}

ordered_json record_json(const TrialRecord &r, std::size_t line) {
    ordered_json j;
    j["line"] = line;
    j["protocol"] = r.protocol;
    j["outcome"] = r.outcome;
    ordered_json probs = ordered_json::object();
    for (const auto &[name, p] : r.probabilities) {
        probs[name] = p.str();
    }
    j["probabilities"] = probs;
    j["deterministic"] = r.deterministic;
    j["seed"] = r.seed;
    j["copies"] = r.copies;
    return j;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void apply_op(GraphRegister &reg, const Command &cmd, ordered_json &entry) {
    const auto &v = cmd.vertices;
    const std::string &op = cmd.name;
    if (op == "cz") {
        reg.cz(v[0], v[1]);
    } else if (op == "cnot") {
        reg.cnot(v[0], v[1]);
    } else if (op == "fx") {
        reg.fx(v[0], v[1]);
    } else if (op == "fxw") {
        reg.fx_wrapped(v[0], v[1]);
    } else if (op == "x") {
        reg.apply_pauli(PauliKind::X, v[0]);
    } else if (op == "y") {
        reg.apply_pauli(PauliKind::Y, v[0]);
    } else if (op == "z") {
        reg.apply_pauli(PauliKind::Z, v[0]);
    } else if (op == "localcomp") {
        reg.local_complement(v[0]);
    } else if (op == "iac") {
        reg.interset_complement(cmd.set1, cmd.set2);
    } else if (op == "iec") {
        reg.intraset_complement(cmd.set1);
    } else if (op == "addvertex") {
        entry["vertex"] = reg.add_vertex();
    } else if (op == "delete") {
        entry["outcome"] = reg.delete_vertex(v[0], cmd.word == "blind" ? DeleteMode::kBlind : DeleteMode::kCorrected);
    } else {
        throw std::logic_error("unhandled op " + op);
    }
}

class Executor {
   public:
    Executor(const Graph &graph, const RunOptions &options, std::string script_dir)
        : options_(options), script_dir_(std::move(script_dir)) {
        reg_ = GraphRegister::prepare(graph, options.seed);
        prep_ = reg_.counters();
    }

    ordered_json run(const OpScript &script) {
        ordered_json commands = ordered_json::array();
        for (const Command &cmd : script.commands) {
            ordered_json entry;
            entry["line"] = cmd.line;
            entry["command"] = cmd.text;
            try {
                step(cmd, entry);
            } catch (const ParseError &) {
                throw;
            } catch (const ResourceExhausted &e) {
                throw ScriptError(options_.script_path, cmd.line, e.what(), kExitExhausted);
            } catch (const std::exception &e) {
                throw ScriptError(options_.script_path, cmd.line, e.what(), kExitPrecondition);
            }
            commands.push_back(std::move(entry));
        }

        ordered_json report;
        report["version"] = kVersion;
        report["seed"] = options_.seed;
        report["trials_per_command"] = options_.trials;
        report["final_graph"] = format_graph(reg_.shadow());
        report["counters"] = counters_json(reg_.counters() - prep_);
        report["preparation_counters"] = counters_json(prep_);
        report["commands"] = std::move(commands);
        report["trials"] = std::move(trials_);
        return report;
    }

   private:
    void step(const Command &cmd, ordered_json &entry) {
        if (cmd.is_op) {
            GateCounters before = reg_.counters();
            apply_op(reg_, cmd, entry);
            entry["counters"] = counters_json(reg_.counters() - before);
            return;
        }
        if (cmd.name == "verify") {
            bool ok = reg_.verify();
            entry["verify"] = ok;
            if (!ok) {
                throw IntegrityError("assert verify failed: tableau and shadow graph disagree");
            }
            return;
        }
        if (cmd.name == "readout") {
            readout_command(cmd, entry);
            return;
        }
        std::function<TrialRecord(std::uint64_t)> trial;
        const GraphRegister &reg = reg_;
        if (cmd.name == "compare") {
            std::filesystem::path path(cmd.word);
            if (path.is_relative()) {
                path = std::filesystem::path(script_dir_) / path;
            }
            auto other = std::make_shared<GraphRegister>(
                GraphRegister::prepare(load_graph_file(path.string()), options_.seed));
            trial = [&reg, other](std::uint64_t s) { return equality_test(reg, *other, s); };
        } else if (cmd.name == "automorphism") {
            auto perm = cycles_to_permutation(cmd.cycles, reg.num_vertices());
            trial = [&reg, perm](std::uint64_t s) { return automorphism_test(reg, perm, s); };
        } else if (cmd.name == "vcompare") {
            std::size_t a = cmd.vertices[0];
            std::size_t b = cmd.vertices[1];
            trial = [&reg, a, b](std::uint64_t s) {
                GraphRegister copy = reg;
                return vertex_compare(copy, a, b, s);
            };
        } else if (cmd.name == "measure") {
            ParityKind kind = cmd.word == "euler" ? ParityKind::kEven : ParityKind::kOdd;
            trial = [&reg, kind](std::uint64_t s) {
                GraphRegister c1 = reg;
                GraphRegister c2 = reg;
                return degree_parity_test(c1, c2, kind, s);
            };
        } else {
            throw std::logic_error("unhandled command " + cmd.name);
        }
        record(cmd, run_trials(options_.trials, options_.seed, trial), entry);
    }

    void record(const Command &cmd, const std::vector<TrialRecord> &records, ordered_json &entry) {
        ordered_json counts = ordered_json::object();
        if (!records.empty()) {
            for (const auto &[name, p] : records.front().probabilities) {
                counts[name] = 0;
            }
            entry["probabilities"] = record_json(records.front(), cmd.line)["probabilities"];
        }
        for (const auto &r : records) {
            counts[r.outcome] = counts.value(r.outcome, 0) + 1;
            trials_.push_back(record_json(r, cmd.line));
        }
        entry["outcomes"] = counts;
    }

    void readout_command(const Command &cmd, ordered_json &entry) {
        const GraphRegister &reg = reg_;
        std::size_t max_copies = options_.max_copies;
        std::vector<ReadoutRun> runs(options_.trials);
        std::function<TrialRecord(std::uint64_t)> trial = [&](std::uint64_t s) {
            RegisterCopies source(reg, s, max_copies);
            ReadoutRun run = readout(source, s);
            TrialRecord rec;
            rec.protocol = "readout";
            rec.outcome = format_graph(run.recovered);
            rec.probabilities = {{rec.outcome, Dyadic(1)}};
            rec.deterministic = true;
            rec.seed = s;
            rec.copies = run.copies_used;
            runs[s - options_.seed] = std::move(run);
            return rec;
        };
        std::vector<TrialRecord> records = run_trials(options_.trials, options_.seed, trial);
        std::size_t total_copies = 0;
        std::size_t total_iterations = 0;
        bool all_match = true;
        for (const auto &r : runs) {
            total_copies += r.copies_used;
            total_iterations += r.iterations;
            all_match = all_match && r.recovered == reg.shadow();
        }
        if (!runs.empty()) {
            entry["recovered"] = format_graph(runs.front().recovered);
            entry["mean_copies"] = static_cast<double>(total_copies) / static_cast<double>(runs.size());
            entry["mean_iterations"] = static_cast<double>(total_iterations) / static_cast<double>(runs.size());
        }
        entry["matches_register"] = all_match;
        for (const auto &r : records) {
            trials_.push_back(record_json(r, cmd.line));
        }
    }

    const RunOptions &options_;
    std::string script_dir_;
    GraphRegister reg_;
    GateCounters prep_;
    ordered_json trials_ = ordered_json::array();
};

}  // namespace

nlohmann::ordered_json execute(const Graph &graph, const OpScript &script, const RunOptions &options,
                               const std::string &script_dir) {
    return Executor(graph, options, script_dir).run(script);
}

std::string format_text(const nlohmann::ordered_json &report) {
    std::ostringstream out;
    out << "qgraph " << report["version"].get<std::string>() << "  seed " << report["seed"].dump() << "\n";
    for (const auto &entry : report["commands"]) {
        out << "line " << entry["line"].dump() << ": " << entry["command"].get<std::string>();
        for (const auto &[key, value] : entry.items()) {
            if (key != "line" && key != "command") {
                out << "  " << key << "=" << value.dump();
            }
        }
        out << "\n";
    }
    out << "counters:";
    for (const auto &[key, value] : report["counters"].items()) {
        out << " " << key << "=" << value.dump();
    }
    out << "\nfinal graph:\n" << report["final_graph"].get<std::string>();
    return out.str();
}

int run(const RunOptions &options, std::ostream &out, std::ostream &err) {
    try {
        Graph graph = load_graph_file(options.graph_path);
        OpScript script;
        std::string script_dir = ".";
        if (!options.script_path.empty()) {
            script = parse_script(read_file(options.script_path), options.script_path);
            check_script(script, graph.num_vertices(), options.script_path);
            auto parent = std::filesystem::path(options.script_path).parent_path();
            if (!parent.empty()) {
                script_dir = parent.string();
            }
        }
        ordered_json report = execute(graph, script, options, script_dir);
        if (options.format == "text") {
            out << format_text(report);
        } else {
            out << report.dump(2) << "\n";
        }
        return kExitOk;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ScriptError &e) {
        err << (e.exit_code() == kExitExhausted ? "resource exhausted: " : "error: ") << e.what() << "\n";
        return e.exit_code();
    }
}

}  // namespace qgraph::cli
