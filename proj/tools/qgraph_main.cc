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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qgraph/cli/bench.h"
#include "qgraph/cli/runner.h"

int main(int argc, char **argv) {
    CLI::App app{"Graphs stored as simulated graph states"};
    app.require_subcommand(1);

    qgraph::cli::RunOptions run;
    CLI::App *run_cmd = app.add_subcommand("run", "Execute an operation script against a graph");
    run_cmd->add_option("--graph", run.graph_path, "Graph file")->required();
    run_cmd->add_option("--script", run.script_path, "Operation script (empty script if omitted)");
    run_cmd->add_option("--seed", run.seed, "Seed for every random choice");
    run_cmd->add_option("--trials", run.trials, "Repetitions of each protocol command")->check(CLI::PositiveNumber);
    run_cmd->add_option("--format", run.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_option("--max-copies", run.max_copies, "Copy budget for each readout run");

    qgraph::cli::BenchOptions bench;
    std::string out_path;
    CLI::App *bench_cmd = app.add_subcommand("bench", "Emit gate and copy counts as CSV");
    std::vector<std::string> workloads = qgraph::cli::bench_workloads();
    workloads.push_back("all");
    bench_cmd->add_option("--workload", bench.workload, "Workload name")->check(CLI::IsMember(workloads));
    bench_cmd->add_option("--n", bench.ns, "Graph sizes")->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "Readout runs per size");
    bench_cmd->add_option("--seed", bench.seed, "Seed");
    bench_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : qgraph::cli::kExitParse;
    }

    if (*run_cmd) {
        return qgraph::cli::run(run, std::cout, std::cerr);
    }
    try {
        if (out_path.empty()) {
            qgraph::cli::run_bench(bench, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open " << out_path << "\n";
                return qgraph::cli::kExitParse;
            }
            qgraph::cli::run_bench(bench, out);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qgraph::cli::kExitPrecondition;
    }
    return 0;
}
