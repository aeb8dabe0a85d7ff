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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qgraph::cli {

struct BenchOptions {
    /// prepare_constructive, prepare_complete_iec, iac_sweep, readout_copies, or all.
    std::string workload = "all";
    std::vector<std::size_t> ns = {4, 8, 16, 32};
    std::size_t trials = 200;
    std::uint64_t seed = 1;
};

inline constexpr const char *kBenchHeader = "workload,n,param,one_qubit_gates,two_qubit_gates,measurements,copies";

/// Writes the CSV header and one row per (workload, n). Gate-count workloads
/// are exact; readout_copies reports means over `trials` random graphs.
void run_bench(const BenchOptions &options, std::ostream &csv);

/// Names accepted by --workload.
const std::vector<std::string> &bench_workloads();

}  // namespace qgraph::cli
