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

#include <string>
#include <string_view>

#include "qgraph/graph_model.h"

namespace qgraph {

/// Parses the line-oriented graph format:
///
///     # comment
///     graph <n>
///     edge <u> <v>        (0-based; u == v declares a self-loop)
///
/// Repeated `edge` lines toggle, so listing an edge twice removes it.
/// Errors are reported as ParseError carrying `source` and the line number.
Graph parse_graph(std::string_view text, const std::string &source = "<graph>");

/// Canonical text for `g`; parse_graph(format_graph(g)) == g.
std::string format_graph(const Graph &g);

/// Reads and parses a file; the path is used as the error source.
Graph load_graph_file(const std::string &path);

}  // namespace qgraph
