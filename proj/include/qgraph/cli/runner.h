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
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "qgraph/cli/script.h"
#include "qgraph/graph_model.h"

namespace qgraph::cli {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 2,
    kExitPrecondition = 3,
    kExitExhausted = 4,
};

struct RunOptions {
    std::string graph_path;
    std::string script_path;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string format = "json";
    /// Copy budget for each readout run.
    std::size_t max_copies = std::numeric_limits<std::size_t>::max();
};

/// Executes `script` against a register prepared from `graph`. Protocol
/// commands run `trials` times on fresh copies of the current state with
/// seeds seed + i; the register itself only changes through `op` commands.
/// Runtime failures are rethrown as ScriptError carrying the script line.
nlohmann::ordered_json execute(const Graph &graph, const OpScript &script, const RunOptions &options,
                               const std::string &script_dir = ".");

/// Failure of a script command at run time.
class ScriptError : public std::runtime_error {
   public:
    ScriptError(const std::string &source, std::size_t line, const std::string &what, int exit_code)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), exit_code_(exit_code) {
    }
    int exit_code() const {
        return exit_code_;
    }

   private:
    int exit_code_;
};

/// Plain-text rendering of a report.
std::string format_text(const nlohmann::ordered_json &report);

/// The `run` subcommand: loads files, executes, prints the report to `out`,
/// and reports failures on `err`. Returns the process exit code.
int run(const RunOptions &options, std::ostream &out, std::ostream &err);

}  // namespace qgraph::cli
