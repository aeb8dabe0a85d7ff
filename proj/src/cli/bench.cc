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

#include "qgraph/cli/bench.h"

#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>

#include "qgraph/errors.h"
#include "qgraph/graph_state.h"
#include "qgraph/readout.h"

namespace qgraph::cli {

namespace {

void row(std::ostream &csv, const std::string &workload, std::size_t n, std::size_t param, const GateCounters &c,
         std::size_t copies) {
    csv << workload << ',' << n << ',' << param << ',' << c.one_qubit_gates << ',' << c.two_qubit_gates << ','
        << c.measurements << ',' << copies << '\n';
}

Graph random_graph(std::size_t n, std::mt19937_64 &rng) {
    Graph g(n);
    for (std::size_t u = 0; u < n; u++) {
        if (rng() & 1) {
            g.toggle_loop(u);
        }
        for (std::size_t v = u + 1; v < n; v++) {
            if (rng() & 1) {
                g.toggle_edge(u, v);
            }
        }
    }
    return g;
}

void bench_one(const std::string &workload, std::size_t n, const BenchOptions &options, std::ostream &csv) {
    if (workload == "prepare_constructive") {
        Graph k = Graph::complete(n);
        row(csv, workload, n, k.num_edges(), GraphRegister::prepare(k, options.seed).counters(), 0);
    } else if (workload == "prepare_complete_iec") {
        row(csv, workload, n, n, GraphRegister::prepare_complete(n, options.seed).counters(), 0);
    } else if (workload == "iac_sweep") {
        GraphRegister reg = GraphRegister::prepare(Graph(n), options.seed);
        std::vector<std::size_t> s1(n / 2);
        std::vector<std::size_t> s2(n - n / 2);
        std::iota(s1.begin(), s1.end(), std::size_t{0});
        std::iota(s2.begin(), s2.end(), n / 2);
        GateCounters before = reg.counters();
        reg.interset_complement(s1, s2);
        row(csv, workload, n, s1.size() + s2.size(), reg.counters() - before, 0);
    } else if (workload == "readout_copies") {
        std::mt19937_64 rng(options.seed + n);
        double copies = 0;
        double two = 0;
        double meas = 0;
        for (std::size_t t = 0; t < options.trials; t++) {
            Graph g = random_graph(n, rng);
            PreparedCopies source(g, options.seed + t);
            ReadoutRun run = readout(source, options.seed + t);
            if (!(run.recovered == g)) {
                throw IntegrityError("readout did not reproduce the prepared graph");
            }
            copies += static_cast<double>(run.copies_used);
            two += static_cast<double>(run.counters.two_qubit_gates);
            meas += static_cast<double>(run.counters.measurements);
        }
        double k = static_cast<double>(options.trials);
        csv << workload << ',' << n << ',' << options.trials << ",0," << std::fixed << std::setprecision(3)
            << two / k << ',' << meas / k << ',' << copies / k << '\n';
        csv.unsetf(std::ios::floatfield);
    } else {
        throw PreconditionError("unknown workload '" + workload + "'");
    }
}

}  // namespace

const std::vector<std::string> &bench_workloads() {
    static const std::vector<std::string> names = {"prepare_constructive", "prepare_complete_iec", "iac_sweep",
                                                   "readout_copies"};
    return names;
}

void run_bench(const BenchOptions &options, std::ostream &csv) {
    std::vector<std::string> selected;
    if (options.workload == "all") {
        selected = bench_workloads();
    } else {
        selected = {options.workload};
    }
    csv << kBenchHeader << '\n';
    for (const auto &w : selected) {
        for (std::size_t n : options.ns) {
            bench_one(w, n, options, csv);
        }
    }
}

}  // namespace qgraph::cli
