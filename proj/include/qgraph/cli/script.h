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
#include <string>
#include <string_view>
#include <vector>

namespace qgraph::cli {

/// One script line. Only the fields relevant to `name` are filled in.
struct Command {
    std::size_t line = 0;
    std::string text;
    /// Ops: cz cnot fx fxw x y z localcomp iac iec addvertex delete.
    /// Others: verify measure compare automorphism vcompare readout.
    std::string name;
    bool is_op = false;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> set1;
    std::vector<std::size_t> set2;
    std::vector<std::vector<std::size_t>> cycles;
    /// blind|corrected, euler|odd, or a graph file path.
    std::string word;
};

struct OpScript {
    std::vector<Command> commands;
};

/// Grammar, one command per line ('#' starts a comment line):
///
///     op cz u v | op cnot a b | op fx a b | op fxw a b | op x|y|z v
///     op localcomp v | op iac {..} {..} | op iec {..} | op addvertex
///     op delete v blind|corrected
///     assert verify | measure euler|odd | compare <graphfile>
///     automorphism <cycles> | vcompare a b | readout
///
/// Sets are written {0,1,2}; permutations in cycle notation (0 1)(2 3), with
/// () for the identity. Errors are ParseError with `source` and line number.
OpScript parse_script(std::string_view text, const std::string &source = "<script>");

/// Resolves every vertex reference against the graph size, following
/// addvertex and delete. Throws ParseError on the first bad reference.
void check_script(const OpScript &script, std::size_t num_vertices, const std::string &source);

/// The permutation v -> image of v under the cycles, on n points.
std::vector<std::size_t> cycles_to_permutation(const std::vector<std::vector<std::size_t>> &cycles,
                                               std::size_t n);

}  // namespace qgraph::cli
